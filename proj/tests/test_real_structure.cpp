#include <doctest.h>

#include "spectre/brute.hpp"
#include "spectre/real_structure.hpp"

#include <random>

using namespace spectre;

namespace {

cmat random_unitary_matrix(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    cmat z(n, n);
    for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<cmat> qr(z);
    return qr.householderQ();
}

}  // namespace

TEST_SUITE("real_structure") {

TEST_CASE("KO sign table") {
    const int eps[8] = {1, 1, -1, -1, -1, -1, 1, 1};
    const int eps1[8] = {1, -1, 1, 1, 1, -1, 1, 1};
    for (int n = 0; n < 8; ++n) {
        KOData k = ko_signs(n);
        CHECK(k.eps == eps[n]);
        CHECK(k.eps1 == eps1[n]);
        CHECK(k.eps2 == (n % 2 ? 0 : (n % 4 == 0 ? 1 : -1)));
    }
    CHECK_THROWS_AS(ko_signs(8), InputError);
}

TEST_CASE("admissibility") {
    IntMatrix sym(2, 2), asym(2, 2);
    sym << 1, 1, 1, 0;
    asym << 0, 1, 0, 0;
    CHECK(admissible(sym, 1));
    CHECK_FALSE(admissible(asym, 1));
    Algebra a({{Ring::R, 1}, {Ring::R, 1}});
    CHECK_THROWS_AS(canonical_J(a, asym, 1), InputError);
    // J^2 = -1 on a real diagonal block needs an even multiplicity
    IntMatrix one(2, 2);
    one << 1, 0, 0, 0;
    CHECK_FALSE(admissible(one, 3));
}

TEST_CASE("canonical real structures satisfy their relations") {
    Algebra a({{Ring::C, 1}, {Ring::H, 1}});
    IntMatrix m(3, 3);
    m << 2, 0, 1, 0, 2, 0, 1, 0, 2;
    for (int n : {1, 3, 5, 7}) {
        if (!admissible(m, n)) continue;
        StructuredBimodule s = canonical_J(a, m, n);
        CHECK(real_structure_defect(s, s.J) < 1e-10);
        CHECK(unitary_group_dim(s.h.even.multiplicities(), n) == brute_unitary_dim(s));
    }
    EvenPair p{IntMatrix::Zero(3, 3), IntMatrix::Zero(3, 3)};
    p.even(0, 0) = 2;
    p.odd(1, 1) = 2;
    for (int n : {0, 2, 4, 6}) {
        if (!admissible(p, n)) continue;
        StructuredBimodule s = canonical_J(a, p, n);
        CHECK(real_structure_defect(s, s.J) < 1e-10);
    }
}

TEST_CASE("normalization recovers the canonical J") {
    Algebra a({{Ring::R, 1}, {Ring::C, 1}});
    IntMatrix m(3, 3);
    m << 1, 1, 0, 1, 0, 1, 0, 1, 2;
    for (int n : {1, 7}) {
        StructuredBimodule s = canonical_J(a, m, n);
        cmat v = random_lr_unitary(s, 3);
        AntiUnitary j{v * s.J.U * v.transpose()};
        CHECK(real_structure_defect(s, j) < 1e-9);
        cmat w = normalize_real_structure(s, j);
        CHECK(conjugation_defect(s, j, w) < 1e-8);
    }
}

TEST_CASE("Takagi and symplectic factorizations") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cmat u = random_unitary_matrix(4, seed);
        cmat k = u * u.transpose();
        cmat w = takagi_unitary(k);
        CHECK((w * w.transpose() - k).norm() < 1e-9);
        CHECK((w * w.adjoint() - eye(4)).norm() < 1e-9);
        cmat s = u * omega(2) * u.transpose();
        cmat v = symplectic_unitary(s);
        CHECK((v * omega(2) * v.transpose() - s).norm() < 1e-9);
    }
}

}  // TEST_SUITE
