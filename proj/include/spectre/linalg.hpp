#pragma once

// Dense linear algebra helpers shared by every module.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectre {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using rmat = Eigen::MatrixXd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

/// Exact integer matrix (multiplicities, signed multiplicities, forms).
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown for malformed input (shape, admissibility, schema).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a numerical check on supplied data fails.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kTol = 1e-10;

cmat kron(const cmat& a, const cmat& b);
cmat eye(Eigen::Index n);
cmat block_diag(const cmat& a, const cmat& b);

/// Spectral norm (largest singular value); 0 for empty matrices.
double op_norm(const cmat& a);

/// Orthonormal basis (columns) of the null space of a; singular values below
/// tol * max(1, largest) count as zero.
cmat nullspace(const cmat& a, double tol = 1e-9);
rmat nullspace(const rmat& a, double tol = 1e-9);

/// Numerical rank with the same threshold rule as nullspace.
Eigen::Index rank(const cmat& a, double tol = 1e-9);
Eigen::Index rank(const rmat& a, double tol = 1e-9);

/// Iteratively refined complex null space of a family of linear maps on
/// C^{dim}. Each constraint maps a vector to a vector of any length.
cmat common_nullspace(Eigen::Index dim, const std::vector<std::function<cvec(const cvec&)>>& constraints,
                      double tol = 1e-9);

/// Real dimension of {x in span_R(basis) : f(x) = 0} where f is real-linear
/// and returns a complex vector. Basis vectors are assumed R-independent.
Eigen::Index real_nullity(const std::vector<cmat>& basis, const std::function<cmat(const cmat&)>& f,
                          double tol = 1e-9);

/// Orthonormal basis (real Frobenius inner product) of the real span of mats.
/// Computed from the Gram matrix; Gram eigenvalues below 0.1 * tol * max(1, largest)
/// count as zero, which suits the exactly structured systems handled here.
std::vector<cmat> real_span_basis(const std::vector<cmat>& mats, double tol = 1e-9);

/// Real rank of a family of matrices.
Eigen::Index real_rank(const std::vector<cmat>& mats, double tol = 1e-9);

/// Exact determinant by fraction-free Gaussian elimination.
/// Returned as a decimal string to avoid exposing the big-integer type.
std::string exact_det(const IntMatrix& a);
bool exact_nonsingular(const IntMatrix& a);

/// Orthonormal basis (columns) of the range of a Hermitian projection.
cmat projection_range(const cmat& p);

/// Hermitian square root inverse for positive definite h.
cmat inv_sqrt_psd(const cmat& h);

/// Entry-wise rounding with a check that every entry is within tol of an integer.
IntMatrix round_to_int(const rmat& a, double tol, const std::string& what);

/// Column-major vectorization and its inverse.
cvec vec(const cmat& a);
cmat unvec(const cvec& v, Eigen::Index rows, Eigen::Index cols);

/// Shorthand for the imaginary unit.
inline const cplx I1{0.0, 1.0};

}  // namespace spectre
