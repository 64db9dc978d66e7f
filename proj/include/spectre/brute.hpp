#pragma once

// Brute-force dimensions from the raw linear constraint systems. Used as an
// independent check of the structural formulas; limited to small spaces.

#include "spectre/real_structure.hpp"

#include <optional>

namespace spectre {

/// Largest total Hilbert dimension accepted (SPECTRE_MAX_BRUTE_DIM, default 40).
Eigen::Index brute_cap();

/// Complex dimensions of left-, right- and two-sided-linear maps H_m1 -> H_m2.
LinmapDims brute_linmap_dims(const Algebra& a, const IntMatrix& m1, const IntMatrix& m2);

/// Real dimension of the self-adjoint order-one operators satisfying the
/// structure relations of s, commuting with lambda(c) and rho(c) for c in
/// central, and with eps when given.
long long brute_dirac_dim(const StructuredBimodule& s, const std::vector<Element>& central,
                          const std::optional<cmat>& eps = std::nullopt);

/// Real dimension of the Lie algebra of structure-preserving left-right unitaries.
long long brute_unitary_dim(const StructuredBimodule& s);

/// Real dimension of the self-adjoint operators commuting with lambda(A),
/// rho(A) and J (and with gamma when graded).
long long brute_commutant_selfadjoint_dim(const StructuredBimodule& s);

/// Real dimension of the kernel of M -> M + (J-conjugate of M) on right-linear M.
long long brute_kernel_dim(const StructuredBimodule& s);

}  // namespace spectre
