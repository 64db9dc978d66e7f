#include <doctest.h>

#include "spectre/algebra.hpp"

using namespace spectre;

namespace {

std::vector<Algebra> small_algebras() {
    return {Algebra({{Ring::R, 1}}),
            Algebra({{Ring::C, 1}}),
            Algebra({{Ring::H, 1}}),
            Algebra({{Ring::R, 2}, {Ring::C, 1}}),
            Algebra({{Ring::H, 2}, {Ring::C, 3}}),
            Algebra({{Ring::C, 1}, {Ring::H, 1}, {Ring::H, 1}, {Ring::C, 3}})};
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("spectrum and dimensions") {
    Algebra a({{Ring::R, 2}, {Ring::C, 3}, {Ring::H, 1}});
    CHECK(a.spectrum_size() == 4);
    CHECK(a.n(0) == 2);
    CHECK(a.n(1) == 3);
    CHECK(a.n(2) == 3);
    CHECK(a.n(3) == 2);
    CHECK(a.point_label(1) == "2");
    CHECK(a.point_label(2) == "2bar");
    CHECK(a.real_dim() == 4 + 18 + 4);
    CHECK(a.conjugate_point(0) == -1);
    CHECK(a.conjugate_point(1) == 2);
    CHECK(a.describe() == "M2(R) + M3(C) + H");
}

TEST_CASE("ring parsing") {
    CHECK(ring_from_string("H") == Ring::H);
    CHECK_THROWS_AS(ring_from_string("Q"), InputError);
}

TEST_CASE("basis length and independence") {
    for (const auto& a : small_algebras()) {
        auto basis = algebra_basis(a);
        CHECK(static_cast<int>(basis.size()) == a.real_dim());
        std::vector<cmat> images;
        for (const auto& b : basis) {
            cmat stacked = cmat::Zero(0, 0);
            for (const auto& blk : b.blocks) stacked = stacked.size() ? block_diag(stacked, blk) : blk;
            images.push_back(stacked);
        }
        CHECK(real_rank(images) == a.real_dim());
    }
}

TEST_CASE("quaternion embedding") {
    cmat z(1, 1);
    z << cplx(1, 2);
    cmat q = quaternion_embed(z, cmat::Zero(1, 1));
    CHECK(std::abs(q(0, 0) - cplx(1, 2)) < 1e-15);
    CHECK(std::abs(q(1, 1) - cplx(1, -2)) < 1e-15);
    CHECK(std::abs(q(0, 1)) < 1e-15);
    // j * j = -1
    cmat one = cmat::Identity(1, 1);
    cmat j = quaternion_embed(cmat::Zero(1, 1), one);
    CHECK((j * j + eye(2)).norm() < 1e-14);
}

TEST_CASE("irreps are *-homomorphisms") {
    for (const auto& a : small_algebras()) {
        Element x = random_element(a, 3), y = random_element(a, 4);
        for (int alpha = 0; alpha < a.spectrum_size(); ++alpha) {
            cmat lx = irrep_apply(a, alpha, x), ly = irrep_apply(a, alpha, y);
            CHECK((irrep_apply(a, alpha, mul(x, y)) - lx * ly).norm() < 1e-10);
            CHECK((irrep_apply(a, alpha, adjoint(x)) - lx.adjoint()).norm() < 1e-10);
        }
    }
}

TEST_CASE("element membership") {
    Algebra r({{Ring::R, 1}});
    Element x{{cmat::Constant(1, 1, cplx(0, 1))}};
    CHECK_THROWS_AS(check_element(r, x), InputError);
    Algebra h({{Ring::H, 1}});
    Element bad{{cmat::Identity(2, 2) + cmat::Constant(2, 2, 0.0)}};
    bad.blocks[0](0, 0) = 2.0;
    CHECK_THROWS_AS(check_element(h, bad), InputError);
    CHECK_NOTHROW(check_element(h, unit_element(h)));
}

TEST_CASE("random unitaries") {
    Algebra r({{Ring::R, 1}});
    for (std::uint64_t s = 1; s < 20; ++s) CHECK(std::abs(std::abs(random_unitary(r, s).blocks[0](0, 0)) - 1.0) < 1e-12);
    Algebra c({{Ring::C, 1}});
    CHECK(std::abs(std::abs(random_unitary(c, 7).blocks[0](0, 0)) - 1.0) < 1e-12);
    for (const auto& a : small_algebras()) {
        Element u = random_unitary(a, 11);
        CHECK_NOTHROW(check_element(a, u));
        CHECK(distance(mul(u, adjoint(u)), unit_element(a)) < 1e-10);
        CHECK(distance(u, random_unitary(a, 11)) == 0.0);
    }
}

TEST_CASE("Haar columns average to zero on M2(C)") {
    Algebra a({{Ring::C, 2}});
    cmat mean = cmat::Zero(2, 2);
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) mean += irrep_apply(a, 0, random_unitary(a, 1000 + s));
    mean /= double(samples);
    CHECK(mean.cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("isotypic projections of the left regular action") {
    Algebra a({{Ring::C, 1}, {Ring::H, 1}});
    auto pi = [&](const Element& x) {
        return block_diag(block_diag(irrep_apply(a, 0, x), irrep_apply(a, 1, x)), irrep_apply(a, 2, x));
    };
    auto p = isotypic_projections(a, pi);
    REQUIRE(p.size() == 3);
    cmat sum = p[0] + p[1] + p[2];
    CHECK((sum - eye(4)).norm() < 1e-9);
    for (const auto& q : p) CHECK((q * q - q).norm() < 1e-9);
}

TEST_CASE("branching of the diagonal embedding") {
    Algebra sub({{Ring::C, 1}});
    Algebra amb({{Ring::C, 2}});
    ElementMap embed = [](const Element& x) {
        cmat d = cmat::Zero(2, 2);
        d(0, 0) = x.blocks[0](0, 0);
        d(1, 1) = std::conj(x.blocks[0](0, 0));
        return Element{{d}};
    };
    CHECK(homomorphism_defect(sub, amb, embed) < 1e-10);
    IntMatrix p = branching_matrix(sub, amb, embed);
    IntMatrix expected(2, 2);
    expected << 1, 1, 1, 1;
    CHECK(p == expected);
}

}  // TEST_SUITE
