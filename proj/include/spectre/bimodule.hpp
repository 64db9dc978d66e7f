#pragma once

// Bimodules encoded by multiplicity matrices and their concrete realization.

#include "spectre/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spectre {

struct EvenPair {
    IntMatrix even;
    IntMatrix odd;
};

EvenPair pair_from_signed(const IntMatrix& mu);
IntMatrix signed_from_pair(const EvenPair& p);

/// Block C^{n_alpha} (x) C^{m} (x) C^{n_beta} at a fixed offset; index (i, j, l)
/// linearized with l fastest.
struct Block {
    int alpha;
    int beta;
    int mult;
    int na;
    int nb;
    Eigen::Index offset;
    Eigen::Index size() const { return Eigen::Index(na) * mult * nb; }
};

class Bimodule {
public:
    Bimodule() = default;
    Bimodule(Algebra a, IntMatrix m);

    const Algebra& algebra() const { return alg_; }
    const IntMatrix& multiplicities() const { return m_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    Eigen::Index dim() const { return dim_; }
    /// Index into blocks() of block (alpha, beta), or -1 when absent.
    int block_index(int alpha, int beta) const;

    cmat left(const Element& x) const;
    cmat right(const Element& x) const;

private:
    Algebra alg_;
    IntMatrix m_;
    std::vector<Block> blocks_;
    Eigen::Index dim_ = 0;
};

Bimodule build_bimodule(const Algebra& a, const IntMatrix& m);

/// Even bimodule realized as H_even (+) H_odd with gamma = 1 (+) -1.
struct GradedBimodule {
    Bimodule even;
    Bimodule odd;

    Eigen::Index dim() const { return even.dim() + odd.dim(); }
    cmat left(const Element& x) const { return block_diag(even.left(x), odd.left(x)); }
    cmat right(const Element& x) const { return block_diag(even.right(x), odd.right(x)); }
    cmat gamma() const;
};

GradedBimodule build_graded(const Algebra& a, const EvenPair& p);

using Action = std::function<cmat(const Element&)>;

/// Recover the multiplicity matrix of commuting left/right *-representations.
/// Throws CheckError when the actions fail the *-homomorphism or commutation
/// checks, which are evaluated at seeded random elements (relative defect).
IntMatrix multiplicity_of(const Algebra& a, Eigen::Index dim, const Action& left, const Action& right,
                          double tol = 1e-8);

/// hat(m)_ij: sum of m over the spectrum points of summands i and j.
IntMatrix hat(const Algebra& a, const IntMatrix& m);

bool is_quasi_orientable(const EvenPair& p);
/// First (alpha, beta) where both members are nonzero.
std::optional<std::pair<int, int>> quasi_orientability_witness(const EvenPair& p);

struct Orientation {
    bool orientable = false;
    /// sgn(hat mu) when orientable.
    IntMatrix coefficients;
    /// Which of the printed conditions failed, for reporting.
    std::vector<std::string> failures;
};

Orientation is_orientable(const Algebra& a, const IntMatrix& mu);

/// Distance between sum_ij lambda(c_ij e_i) rho(e_j) and the block grading on the
/// realization of mu.
double orientation_defect(const Algebra& a, const IntMatrix& mu, const IntMatrix& coefficients);

struct IntersectionForm {
    IntMatrix form;
    std::string determinant;
    bool nondegenerate = false;
};

IntersectionForm intersection_form(const Algebra& a, const EvenPair& p);
IntersectionForm intersection_form_signed(const Algebra& a, const IntMatrix& mu);

/// Total multiplicity data of H_i (+) H_{-i} for an S^0-real bimodule.
EvenPair s0_assemble(const EvenPair& pi, int ko);
IntMatrix s0_assemble(const IntMatrix& mi, int ko);
/// mu = mu_i + eps'' mu_i^T for even ko.
IntMatrix s0_signed(const IntMatrix& mu_i, int ko);
/// Quasi-orientability of the assembled bimodule from the data of H_i.
bool s0_quasi_orientable(const EvenPair& pi, int ko);
bool s0_orientable(const Algebra& a, const IntMatrix& mu_i, int ko);
bool s0_poincare(const Algebra& a, const EvenPair& pi, int ko);

/// m' = P m P^T for each member.
IntMatrix restrict_matrix(const IntMatrix& m, const IntMatrix& branching);
EvenPair restrict_pair(const EvenPair& p, const IntMatrix& branching);

struct LinmapDims {
    long long left = 0;
    long long right = 0;
    long long both = 0;
};

/// Complex dimensions of left-, right- and two-sided-linear maps H_m1 -> H_m2.
LinmapDims linmap_dims(const Algebra& a, const IntMatrix& m1, const IntMatrix& m2);

void check_multiplicity(const Algebra& a, const IntMatrix& m);

}  // namespace spectre
