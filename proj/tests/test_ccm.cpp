#include <doctest.h>

#include "spectre/ccm.hpp"

using namespace spectre;

TEST_SUITE("ccm") {

TEST_CASE("fixture matrices for one and two generations") {
    for (int n : {1, 2}) {
        SMFixture fx = build_sm(n);
        for (const auto& c : fx.checks) {
            INFO(c.name);
            CHECK(c.pass());
        }
        IntMatrix cap(3, 3);
        cap << 0, -1, -1, 1, 0, 1, 1, -1, 0;
        CHECK(fx.cap_F.form == 2 * n * cap);
        CHECK_FALSE(fx.cap_F.nondegenerate);
    }
}

TEST_CASE("embedding A_F into A_LR") {
    Algebra f = algebra_f(), lr = algebra_lr();
    CHECK(homomorphism_defect(f, lr, embed_f_in_lr) < 1e-10);
    Element x = random_element(f, 4);
    CHECK_NOTHROW(check_element(lr, embed_f_in_lr(x)));
}

TEST_CASE("epsilon_F grading relations") {
    SMFixture fx = build_sm(1);
    const StructuredBimodule& h = fx.h_lr;
    cmat e = fx.eps_F;
    CHECK((e * e - eye(h.dim())).norm() < 1e-10);
    CHECK((e * h.gamma() - h.gamma() * e).norm() < 1e-10);
    cmat je = h.J.U * e.conjugate();
    cmat ej = e * h.J.U;
    CHECK((je + ej).norm() < 1e-10);
}

TEST_CASE("C_F generators span a *-subalgebra") {
    Algebra f = algebra_f();
    for (const auto& g : c_f_generators()) CHECK_NOTHROW(check_element(f, g));
}

TEST_CASE("report passes with the oracle at one generation") {
    SMReport r = sm_report(1, true);
    CHECK(r.pass());
    REQUIRE(r.oracle_constrained);
    CHECK(*r.oracle_constrained == r.constrained_dim);
    CHECK(r.constrained_dim == 8 + 2);
    CHECK(r.witness == "(1,1)");
}

}  // TEST_SUITE
