#include <doctest.h>

#include "spectre/classify.hpp"

#include <random>

using namespace spectre;

namespace {

/// Random element of U(M_r(K)) as an r x r complex matrix.
cmat random_k_unitary(Ring k, int r, std::uint64_t seed) {
    Algebra a({{k, k == Ring::H ? r / 2 : r}});
    return random_unitary(a, seed).blocks[0];
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("even KO-dimensions are rejected") {
    CHECK_THROWS_AS(classify_irreducible(Algebra({{Ring::C, 1}}), 2), InputError);
}

TEST_CASE("single summands give one type A triplet") {
    for (Ring k : {Ring::R, Ring::C, Ring::H})
        for (int ko : {1, 3, 5, 7}) {
            auto ts = classify_irreducible(Algebra({{k, 1}}), ko);
            REQUIRE(ts.size() == 1);
            CHECK(ts[0].type == TripletType::A);
            CHECK(ts[0].m(0, 0) == (ko_signs(ko).eps == 1 ? 1 : 2));
            CHECK(check_triplet(ts[0]).pass());
        }
}

TEST_CASE("two summands need equal irrep dimensions") {
    CHECK(classify_irreducible(Algebra({{Ring::H, 1}, {Ring::C, 1}}), 1).empty());
    auto ts = classify_irreducible(Algebra({{Ring::H, 1}, {Ring::C, 2}}), 5);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].type == TripletType::B);
    CHECK(check_triplet(ts[0]).pass());
    SeparatingWitness w = separating_witness(ts[0]);
    CHECK(w.injective());
}

TEST_CASE("compatible gradings pass their checks") {
    Algebra a({{Ring::R, 2}, {Ring::H, 1}});
    for (int ko : {1, 3, 5, 7}) {
        for (const auto& t : classify_irreducible(a, ko)) {
            for (const auto& g : compatible_gradings(t)) {
                CHECK(check_grading(t, g).pass());
                if (g.family == GradingFamily::OffDiagonal) CHECK(g.eps2 == ko_signs(ko).eps);
            }
        }
    }
}

TEST_CASE("off-diagonal grading with the wrong sign fails") {
    Algebra a({{Ring::C, 1}, {Ring::C, 1}});
    auto ts = classify_irreducible(a, 3);
    REQUIRE(ts.size() == 1);
    GradingSpec g = offdiagonal_grading(ts[0], eye(1), 1.0);
    CHECK(g.eps2 == -1);
    for (const auto& x : compatible_gradings(ts[0], 1)) CHECK(x.family != GradingFamily::OffDiagonal);
}

TEST_CASE("even subalgebra of the Standard Model inputs") {
    Algebra a({{Ring::H, 2}, {Ring::C, 4}});
    auto ts = classify_irreducible(a, 1);
    REQUIRE(ts.size() == 1);
    GradingSpec g = diagonal_grading(ts[0], summand_grading(Ring::H, 4, 2, false),
                                     summand_grading(Ring::C, 4, 4, false), -1);
    CHECK(check_grading(ts[0], g).pass());
    EvenSubalgebra e = even_subalgebra(ts[0], g);
    CHECK(e.case_number == 5);
    CHECK(e.algebra.describe() == "H + H + M4(C)");
    CHECK(cross_check_even(ts[0], g, e).pass());
}

TEST_CASE("even subalgebra cross-checks over small algebras") {
    int checked = 0;
    for (auto [k1, k2, n] : std::vector<std::tuple<Ring, Ring, int>>{
             {Ring::R, Ring::C, 2}, {Ring::H, Ring::R, 2}, {Ring::C, Ring::C, 2}, {Ring::H, Ring::H, 2}}) {
        Algebra a({{k1, k1 == Ring::H ? n / 2 : n}, {k2, k2 == Ring::H ? n / 2 : n}});
        for (const auto& t : classify_irreducible(a, 7))
            for (const auto& g : compatible_gradings(t, -1)) {
                EvenSubalgebra e;
                try {
                    e = even_subalgebra(t, g);
                } catch (const InputError&) {
                    continue;
                }
                CHECK(cross_check_even(t, g, e).pass());
                ++checked;
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("A(T) for the Standard Model inputs") {
    OffDiagonalProblem p{Ring::H, Ring::C, 2, 4, 2, 0};
    ATReport r = A_of_T(p, compatible_partial_isometry(p, 1));
    CHECK(r.dim == 24);
}

TEST_CASE("A(T) is invariant under unitary conjugation of T") {
    for (auto p : {OffDiagonalProblem{Ring::H, Ring::C, 2, 4, 2, 0}, OffDiagonalProblem{Ring::R, Ring::C, 3, 2},
                   OffDiagonalProblem{Ring::H, Ring::H, 4, 2}}) {
        const int r = 1;
        cmat t = compatible_partial_isometry(p, r);
        const long long base = A_of_T(p, t).dim;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            cmat u2 = random_k_unitary(p.k2, p.r2, seed);
            cmat u1 = random_k_unitary(p.k1, p.r1, 100 + seed);
            CHECK(A_of_T(p, u2 * t * u1.adjoint(), 1e-9).dim == base);
        }
    }
}

TEST_CASE("A(T) rejects operators that are not partial isometries") {
    OffDiagonalProblem p{Ring::C, Ring::C, 2, 2};
    CHECK_THROWS_AS(A_of_T(p, 2.0 * eye(2)), InputError);
}

TEST_CASE("d(r) values for (C,C)") {
    OffDiagonalProblem p{Ring::C, Ring::C, 2, 2};
    CHECK(d_of_r(p, 1) == Rational(6));
    CHECK(d_of_r(p, 2) == Rational(8));
    CHECK(d_coefficient(Ring::H) == Rational(1, 2));
}

TEST_CASE("r_max is the exact argmax of d") {
    for (Ring k1 : {Ring::R, Ring::C, Ring::H})
        for (Ring k2 : {Ring::R, Ring::C, Ring::H})
            for (int r1 = 1; r1 <= 8; ++r1)
                for (int r2 = 1; r2 <= 8; ++r2) {
                    if ((k1 == Ring::H && r1 % 2) || (k2 == Ring::H && r2 % 2)) continue;
                    OffDiagonalProblem p{k1, k2, r1, r2};
                    RMaxResult m = r_max(p);
                    CHECK(m.values.size() + m.uncovered.size() == static_cast<std::size_t>(std::min(r1, r2)));
                    for (const auto& [r, v] : m.values) {
                        CHECK(v <= m.best);
                        CHECK((v == m.best) == (m.r_max.count(r) == 1));
                        CHECK(d_of_r(p, r) == v);
                    }
                    for (int r : m.uncovered) CHECK_THROWS_AS(d_of_r(p, r), InputError);
                }
}

TEST_CASE("table agreement on the consistent cases") {
    CHECK(r_max({Ring::C, Ring::C, 2, 2}).r_max == std::set<int>{2});
    CHECK(r_max({Ring::R, Ring::R, 2, 2}).r_max == std::set<int>{2});
    RMaxResult h = r_max({Ring::H, Ring::H, 4, 4});
    CHECK(h.r_max == std::set<int>{4});
    CHECK(h.comparison.agrees);
    CHECK(h.comparison.table_case == 11);
}

TEST_CASE("domain variants") {
    auto v = domain_variants({Ring::H, Ring::C, 2, 4, 2, 0});
    CHECK(v.size() == 2);
    CHECK(domain_variants({Ring::R, Ring::R, 1, 2, 3, 4}).size() == 4);
}

}  // TEST_SUITE
