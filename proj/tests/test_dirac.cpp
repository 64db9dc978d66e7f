#include <doctest.h>

#include "spectre/brute.hpp"
#include "spectre/dirac.hpp"

#include <random>

using namespace spectre;

namespace {

cmat random_matrix(Eigen::Index r, Eigen::Index c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    cmat z(r, c);
    for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = cplx(g(rng), g(rng));
    return z;
}

double commutator_with_left(const cmat& t, const StructuredBimodule& s) {
    double out = 0;
    for (const auto& b : algebra_basis(s.algebra())) out = std::max(out, op_norm(t * s.left(b) - s.left(b) * t));
    return out;
}

double commutator_with_right(const cmat& t, const StructuredBimodule& s) {
    double out = 0;
    for (const auto& b : algebra_basis(s.algebra())) out = std::max(out, op_norm(t * s.right(b) - s.right(b) * t));
    return out;
}

IntMatrix mat2(long long a, long long b, long long c, long long d) {
    IntMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_SUITE("dirac") {

TEST_CASE("projector laws") {
    StructuredBimodule s = plain_odd(Algebra({{Ring::C, 2}}), mat2(1, 1, 0, 1));
    Layout lay = layout_of(s);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cmat t = random_matrix(s.dim(), s.dim(), seed);
        cmat el = project_left(t, lay, lay), er = project_right(t, lay, lay);
        CHECK((project_left(el, lay, lay) - el).norm() < 1e-10);
        CHECK((project_right(er, lay, lay) - er).norm() < 1e-10);
        CHECK((project_left(er, lay, lay) - project_right(el, lay, lay)).norm() < 1e-10);
        CHECK(commutator_with_left(el, s) < 1e-10);
        CHECK(commutator_with_right(er, s) < 1e-10);
        // self-adjointness bookkeeping
        cmat h = t + t.adjoint();
        cmat eh = project_left(h, lay, lay);
        CHECK((eh - eh.adjoint()).norm() < 1e-10);
    }
}

TEST_CASE("traceless first leg has zero mean") {
    Algebra a({{Ring::C, 2}});
    StructuredBimodule s = plain_odd(a, mat2(0, 0, 0, 1));
    Layout lay = layout_of(s);
    cmat d = cmat::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    cmat t = kron(d, random_matrix(2, 2, 9));
    CHECK(project_left(t, lay, lay).norm() < 1e-12);
}

TEST_CASE("order-one defect detects diagonal coupling") {
    Algebra a({{Ring::R, 1}, {Ring::R, 1}});
    StructuredBimodule s = plain_odd(a, mat2(1, 0, 0, 1));
    cmat d = cmat::Zero(2, 2);
    d(0, 1) = d(1, 0) = 1;
    CHECK(order_one_defect(d, s) > 0.1);
    CHECK(order_one_defect(cmat::Zero(2, 2), s) == 0.0);
}

TEST_CASE("assembled operators satisfy every relation") {
    Algebra a({{Ring::C, 1}, {Ring::R, 1}});
    IntMatrix m(3, 3);
    m << 1, 0, 1, 0, 1, 1, 1, 1, 0;
    std::vector<StructuredBimodule> fixtures = {plain_odd(a, m), canonical_J(a, m, 1), canonical_J(a, m, 7)};
    EvenPair p{IntMatrix::Zero(3, 3), IntMatrix::Zero(3, 3)};
    p.even(0, 0) = 1;
    p.even(2, 2) = 1;
    p.odd(1, 2) = 1;
    p.odd(2, 1) = 1;
    fixtures.push_back(plain_even(a, p));
    for (int n : {0, 2, 6})
        if (admissible(p, n)) fixtures.push_back(canonical_J(a, p, n));
    for (const auto& s : fixtures) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            cmat d = assemble_dirac(random_components(s, seed), s);
            RelationDefects e = dirac_defects(d, s);
            const double scale = std::max(1.0, op_norm(d));
            CHECK(e.self_adjoint < 1e-10 * scale);
            CHECK(e.order_one < 1e-10 * scale);
            CHECK(e.grading < 1e-10 * scale);
            CHECK(e.real < 1e-10 * scale);
        }
        CHECK(assemble_dirac(DiracComponents{}, s).norm() == 0.0);
    }
}

TEST_CASE("structural dimensions match the oracle") {
    Algebra a({{Ring::C, 1}, {Ring::H, 1}});
    IntMatrix m(3, 3);
    m << 1, 1, 0, 1, 0, 1, 0, 1, 1;
    for (int n : {1, 3, 5, 7}) {
        if (!admissible(m, n)) continue;
        StructuredBimodule s = canonical_J(a, m, n);
        DiracSpaceReport r = dirac_space_dim(s, true, 1);
        REQUIRE(r.oracle_D0);
        CHECK(*r.oracle_D0 == r.dim_D0);
        CHECK(*r.oracle_U == r.dim_U);
        REQUIRE(r.dim_kernel);
        CHECK(*r.oracle_kernel == *r.dim_kernel);
        KernelBasis k = kernel_basis_Rn(s);
        CHECK(static_cast<long long>(k.basis.size()) == k.real_dim);
        for (const auto& x : k.basis) CHECK(Rn_map(x, s).norm() < 1e-9);
    }
}

TEST_CASE("shape violations are input errors") {
    StructuredBimodule s = plain_odd(Algebra({{Ring::C, 1}}), mat2(1, 1, 1, 1));
    ComponentShapes shapes = component_shapes(s);
    REQUIRE_FALSE(shapes.M.empty());
    DiracComponents c;
    c.M[shapes.M.begin()->first] = cmat::Zero(7, 7);
    CHECK_THROWS_AS(assemble_dirac(c, s), InputError);
}

TEST_CASE("constrained dimension matches the oracle") {
    Algebra a({{Ring::C, 1}, {Ring::R, 1}});
    IntMatrix m(3, 3);
    m << 0, 0, 1, 0, 0, 1, 1, 1, 1;
    StructuredBimodule s = canonical_J(a, m, 1);
    std::vector<Element> gens = {summand_unit(a, 0), summand_unit(a, 0, I1), summand_unit(a, 1)};
    CHECK(constrained_dirac_dim(s, gens) == brute_dirac_dim(s, gens));
}

TEST_CASE("gauge trivialization on a single summand is vacuous") {
    Algebra a({{Ring::C, 1}});
    EvenPair p{mat2(1, 0, 0, 1), IntMatrix::Zero(2, 2)};
    StructuredBimodule s = canonical_J(a, p, 0);
    GaugeResult g = gauge_trivialize(cmat::Zero(s.dim(), s.dim()), s);
    CHECK(g.vacuous);
    CHECK(g.residual == 0.0);
}

}  // TEST_SUITE
