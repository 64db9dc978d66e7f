#pragma once

// KO-dimension signs, admissibility, canonical real structures and their uniqueness.

#include "spectre/bimodule.hpp"

#include <optional>

namespace spectre {

struct KOData {
    int n = 0;
    int eps = 1;   // J^2 = eps
    int eps1 = 1;  // DJ = eps1 JD
    int eps2 = 0;  // gamma J = eps2 J gamma; 0 for odd n
};

KOData ko_signs(int n);

/// The antilinear operator xi -> U conj(xi).
struct AntiUnitary {
    cmat U;

    cvec apply(const cvec& v) const { return U * v.conjugate(); }
    AntiUnitary inverse() const { return {U.transpose()}; }
    /// J^2 as a linear operator.
    cmat square() const { return U * U.conjugate(); }
    /// J A J^{-1} for linear A.
    cmat conjugate_op(const cmat& a) const { return U * a.conjugate() * U.adjoint(); }
    /// (J1 J2) as a linear operator.
    cmat compose(const AntiUnitary& other) const { return U * other.U.conjugate(); }
};

/// A bimodule together with whatever structure it carries: a grading (even
/// case, realized as H_even (+) H_odd) and optionally a real structure.
struct StructuredBimodule {
    GradedBimodule h;
    bool graded = false;
    std::optional<KOData> ko;
    AntiUnitary J;

    const Algebra& algebra() const { return h.even.algebra(); }
    Eigen::Index dim() const { return h.dim(); }
    cmat left(const Element& x) const { return h.left(x); }
    cmat right(const Element& x) const { return h.right(x); }
    cmat gamma() const;
};

StructuredBimodule plain_odd(const Algebra& a, const IntMatrix& m);
StructuredBimodule plain_even(const Algebra& a, const EvenPair& p);

bool admissible(const IntMatrix& m, int n);
bool admissible(const EvenPair& p, int n);

/// Canonical real structure; throws InputError on inadmissible data.
StructuredBimodule canonical_J(const Algebra& a, const IntMatrix& m, int n);
StructuredBimodule canonical_J(const Algebra& a, const EvenPair& p, int n);

/// Largest defect among J^2 = eps, rho(a) = J lambda(a*) J^{-1} and gamma J = eps'' J gamma.
double real_structure_defect(const StructuredBimodule& s, const AntiUnitary& J);

/// Left-right linear unitary U with U J_in U* = J of s (the canonical one).
cmat normalize_real_structure(const StructuredBimodule& s, const AntiUnitary& J_in);

/// || U J_in U* - J ||.
double conjugation_defect(const StructuredBimodule& s, const AntiUnitary& J_in, const cmat& U);

/// Random unitary commuting with both actions (and with gamma when graded).
cmat random_lr_unitary(const StructuredBimodule& s, std::uint64_t seed);

/// Real dimension of the unitary group of left-right linear unitaries
/// preserving the structure.
long long unitary_group_dim(const IntMatrix& m);
long long unitary_group_dim(const IntMatrix& m, int n);
long long unitary_group_dim(const EvenPair& p);
long long unitary_group_dim(const EvenPair& p, int n);

/// Takagi factorization of a symmetric unitary: K = W W^T with W unitary.
cmat takagi_unitary(const cmat& k);
/// Factorization of an antisymmetric unitary: S = W Omega W^T with W unitary.
cmat symplectic_unitary(const cmat& s);

}  // namespace spectre
