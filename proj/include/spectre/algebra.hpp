#pragma once

// Finite-dimensional real C*-algebras given by Wedderburn data.

#include "spectre/linalg.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spectre {

enum class Ring { R, C, H };

char ring_char(Ring r);
Ring ring_from_string(const std::string& s);

struct Summand {
    Ring ring;
    int k;

    /// Complex dimension of the irreducible representation.
    int n() const { return ring == Ring::H ? 2 * k : k; }
    /// Trace of a minimal projection.
    int tau() const { return ring == Ring::H ? 2 : 1; }
    /// Real dimension of M_k(K).
    int real_dim() const;
    /// Size of the complex block stored for an element.
    int block_size() const { return n(); }
};

struct SpecPoint {
    int summand;
    bool conjugate;
    auto operator<=>(const SpecPoint&) const = default;
};

/// An element: one complex block per summand. R blocks are real, H blocks are
/// embedded quaternionic 2k x 2k matrices.
struct Element {
    std::vector<cmat> blocks;
};

class Algebra {
public:
    Algebra() = default;
    explicit Algebra(std::vector<Summand> summands);

    const std::vector<Summand>& summands() const { return summands_; }
    int num_summands() const { return static_cast<int>(summands_.size()); }
    const std::vector<SpecPoint>& spectrum() const { return spectrum_; }
    int spectrum_size() const { return static_cast<int>(spectrum_.size()); }

    /// Irrep dimension of spectrum point alpha.
    int n(int alpha) const { return summands_[spectrum_[alpha].summand].n(); }
    int summand_of(int alpha) const { return spectrum_[alpha].summand; }
    /// Position in the spectrum of the given point, or -1.
    int index_of(SpecPoint p) const;
    /// Index of the linear / conjugate point of summand i (conjugate: -1 unless C).
    int linear_point(int i) const;
    int conjugate_point(int i) const;
    int real_dim() const;

    std::string point_label(int alpha) const;
    std::string describe() const;

    bool operator==(const Algebra& o) const;

private:
    std::vector<Summand> summands_;
    std::vector<SpecPoint> spectrum_;
};

/// The ordered spectrum; linear points precede their conjugates.
std::vector<SpecPoint> spectrum(const Algebra& a);

/// lambda_p(x).
cmat irrep_apply(const Algebra& a, SpecPoint p, const Element& x);
cmat irrep_apply(const Algebra& a, int alpha, const Element& x);

/// Embedding of a quaternionic matrix Z1 + j Z2 into M_2k(C).
cmat quaternion_embed(const cmat& z1, const cmat& z2);

/// Omega = [[0, -1_k], [1_k, 0]].
cmat omega(int k);

Element zero_element(const Algebra& a);
Element unit_element(const Algebra& a);
/// Unit of summand i, scaled by c (c complex allowed only for C summands).
Element summand_unit(const Algebra& a, int i, cplx c = 1.0);
Element add(const Element& x, const Element& y);
Element scale(const Element& x, double s);
Element mul(const Element& x, const Element& y);
Element adjoint(const Element& x);
double distance(const Element& x, const Element& y);

/// Throws InputError when the element does not lie in the algebra.
void check_element(const Algebra& a, const Element& x, double tol = 1e-10);

/// Real basis; length = sum of real dimensions.
std::vector<Element> algebra_basis(const Algebra& a);

/// A small generating set of the algebra (as a real algebra with unit).
std::vector<Element> algebra_generators(const Algebra& a);

/// Haar random unitary, deterministic in the seed.
Element random_unitary(const Algebra& a, std::uint64_t seed);

/// Random element with Gaussian entries (not normalised).
Element random_element(const Algebra& a, std::uint64_t seed);

/// Central projection images for a representation pi: for every spectrum
/// point the isotypic projection. Works for any real *-representation.
std::vector<cmat> isotypic_projections(const Algebra& a, const std::function<cmat(const Element&)>& pi);

using ElementMap = std::function<Element(const Element&)>;

/// P[beta][alpha] = multiplicity of sub-irrep beta in amb-irrep alpha restricted.
IntMatrix branching_matrix(const Algebra& sub, const Algebra& amb, const ElementMap& embed);

/// Check that embed is a unital *-homomorphism; returns the largest defect.
double homomorphism_defect(const Algebra& sub, const Algebra& amb, const ElementMap& embed);

}  // namespace spectre
