#pragma once

// Built-in Standard Model fixtures over A_LR = C + H_L + H_R + M_3(C) and
// A_F = C + H + M_3(C), and the report reproducing their matrices.

#include "spectre/dirac.hpp"

#include <string>
#include <vector>

namespace spectre {

Algebra algebra_lr();
Algebra algebra_f();

/// (zeta, q, m) -> (zeta, q, diag(zeta, conj zeta), m).
Element embed_f_in_lr(const Element& x);

/// lambda(-1, 1, 1, -1) data: the element of A_LR.
Element eps_element();

/// Generators (zeta = 1, zeta = i) of C_F = {(zeta, diag(zeta, conj zeta), 0)}.
std::vector<Element> c_f_generators();

struct MatrixCheck {
    std::string name;
    IntMatrix expected;
    IntMatrix computed;
    bool pass() const { return expected == computed; }
};

struct SMFixture {
    int generations = 1;
    Algebra lr, f;
    IntMatrix mu_E, mu, mu_hat, mu_E_hat;
    EvenPair pair_F;  // H_F over A_F
    IntMatrix branching;
    IntMatrix mu_f;   // H_f over A_F
    IntersectionForm cap, cap_E, cap_F, cap_f;
    StructuredBimodule h_lr;  // H_F over A_LR, KO-dimension 6
    StructuredBimodule h_f;   // H_F over A_F, KO-dimension 6
    cmat eps_F;               // on h_lr
    std::vector<MatrixCheck> checks;
};

SMFixture build_sm(int generations);

/// One free block M^gamma_{alpha beta} of an even real structure.
struct SlotReport {
    std::string label;
    int rows = 0, cols = 0;
    long long real_dim = 0;       // 2 * rows * cols
    long long kernel_in_slot = 0; // real dim of ker R_n inside the slot
    long long constrained = 0;    // surviving real dim under C_F, modulo the kernel
    long long expected_constrained = 0;
};

struct SMReport {
    SMFixture fx;
    // epsilon_F
    double eps_gamma_commutator = 0, eps_J_anticommutator = 0;
    // (a) off-diagonal exclusion over A_LR
    bool right_linear_commute_with_eps = false;
    std::vector<std::string> right_linear_blocks;
    long long dim_D0_lr = 0;
    std::optional<long long> oracle_D0_lr, oracle_D0_lr_eps;
    // (b) A_LR moduli data on H_f
    long long dim_D0_hf = 0;
    LinmapDims hf_linmaps;
    long long dim_U_even = 0, dim_U_odd = 0;
    // (c) A_F parameters
    std::vector<SlotReport> slots;
    long long dim_D0_f = 0, kernel_f = 0, kernel_f_paper = 0, dim_U_f = 0;
    std::optional<long long> oracle_D0_f, oracle_kernel_f;
    // (d) C_F constraint
    long long constrained_dim = 0, constrained_expected = 0;
    std::optional<long long> oracle_constrained;
    // (e) degeneracy and quasi-orientability
    bool mu_hat_degenerate = false, mu_E_hat_degenerate = false;
    bool quasi_orientable_F = true;
    std::string witness;

    bool pass() const;
};

SMReport sm_report(int generations, bool with_oracle);

}  // namespace spectre
