#pragma once

// Irreducible triplets of odd KO-dimension, their compatible gradings, even
// subalgebras, and the off-diagonal subalgebras A(T) with the d(r) search.

#include "spectre/real_structure.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spectre {

enum class TripletType { A, B };

struct IrreducibleTriplet {
    Algebra algebra;
    int ko = 1;
    TripletType type = TripletType::A;
    /// Spectrum points carrying the bimodule; alpha == beta for type A.
    int alpha = 0;
    int beta = 0;
    IntMatrix m;

    StructuredBimodule realize() const { return canonical_J(algebra, m, ko); }
};

/// Concrete checks on a realized triplet.
struct TripletChecks {
    bool faithful = false;
    bool complex_linear = false;
    bool separating = false;
    /// Real dimension of the self-adjoint part of the commutant of
    /// lambda(A), rho(A) and J; 1 exactly when it has no nontrivial projection.
    long long commutant_selfadjoint_dim = 0;
    bool irreducible = false;

    bool pass() const { return faithful && complex_linear && separating && irreducible; }
};

/// All irreducible triplets over a; throws InputError when ko is even.
std::vector<IrreducibleTriplet> classify_irreducible(const Algebra& a, int ko);

/// Type A: always; type B: n_alpha == n_beta.
bool is_separating(const IrreducibleTriplet& t);

struct SeparatingWitness {
    cvec xi;
    /// Complex dimension of span lambda(A) and of its orbit of xi.
    long long algebra_dim = 0;
    long long orbit_dim = 0;
    bool injective() const { return algebra_dim == orbit_dim; }
};

/// sum_i e_i (x) f_1 (x) e_i on each block, and injectivity of c -> c xi on the
/// complex algebra generated by lambda(A).
SeparatingWitness separating_witness(const IrreducibleTriplet& t);

TripletChecks check_triplet(const IrreducibleTriplet& t);

/// A self-adjoint unitary in M_k(K) (imaginary = false) or i M_k(K), on C^n.
struct SummandGrading {
    Ring ring = Ring::R;
    int n = 1;
    bool imaginary = false;
    /// Dimension of the +1 eigenspace.
    int r = 0;
    cmat g;
};

/// Canonical representative with the given signature; throws InputError when
/// no grading of that kind exists (e.g. odd r for H, odd n for imaginary).
SummandGrading summand_grading(Ring ring, int n, int r, bool imaginary);

/// Every canonical representative for a summand, one per (r, imaginary).
std::vector<SummandGrading> summand_gradings(Ring ring, int n);

enum class GradingFamily { TypeA, Diagonal, OffDiagonal };

std::string family_name(GradingFamily f);

struct GradingSpec {
    GradingFamily family = GradingFamily::TypeA;
    /// gamma J = eps2 J gamma.
    int eps2 = 1;
    /// Overall sign for type A.
    int sign = 1;
    /// One entry for type A, two for the diagonal family.
    std::vector<SummandGrading> g;
    /// Off-diagonal data.
    cmat u;
    cplx eta{1.0, 0.0};
    /// The grading on the realized triplet.
    cmat gamma;
};

struct GradingCheck {
    double selfadjoint_defect = 0;
    double unitary_defect = 0;
    double real_structure_defect = 0;
    /// Largest distance from gamma lambda(b) gamma to span_R lambda(A) over a basis.
    double algebra_defect = 0;
    bool pass(double tol = 1e-10) const {
        return selfadjoint_defect < tol && unitary_defect < tol && real_structure_defect < tol && algebra_defect < tol;
    }
};

GradingSpec type_a_grading(const IrreducibleTriplet& t, const SummandGrading& g, int sign);
GradingSpec diagonal_grading(const IrreducibleTriplet& t, const SummandGrading& g1, const SummandGrading& g2,
                             int eps2);
GradingSpec offdiagonal_grading(const IrreducibleTriplet& t, const cmat& u, cplx eta);

GradingCheck check_grading(const IrreducibleTriplet& t, const GradingSpec& g);

/// Representatives of every compatible grading family, restricted to the
/// requested sign eps2 when given. The off-diagonal family has eps2 = eps
/// (J^2 = eps), so it commutes with J only for KO-dimension 1 and 7.
/// Off-diagonal representatives use u = 1, eta = 1 and one seeded Haar
/// unitary with a random phase.
std::vector<GradingSpec> compatible_gradings(const IrreducibleTriplet& t, std::optional<int> eps2 = std::nullopt,
                                             std::uint64_t seed = 1);

/// Which of the six even-subalgebra cases applies.
int even_case(const GradingSpec& g);

struct EvenSubalgebra {
    int case_number = 0;
    Algebra algebra;
    EvenPair pair;
    /// A^even -> A realizing the structural description.
    ElementMap embed;
};

/// Structural description of A^even and (H, gamma) over it. Requires a type B
/// triplet, a diagonal grading with eps2 = -1, r_j > 0, gamma_2 imaginary only
/// if gamma_1 is, and gamma_1 = 1 only if gamma_2 = 1.
EvenSubalgebra even_subalgebra(const IrreducibleTriplet& t, const GradingSpec& g);

struct EvenCrossCheck {
    long long structural_dim = 0;
    long long commutant_dim = 0;
    double embed_defect = 0;
    double commute_defect = 0;
    EvenPair computed;
    bool pairs_match = false;
    bool pass() const { return structural_dim == commutant_dim && embed_defect < 1e-9 && commute_defect < 1e-9 && pairs_match; }
};

/// Commutant of gamma in lambda(A), and the multiplicities of the graded parts
/// of H restricted along embed.
EvenCrossCheck cross_check_even(const IrreducibleTriplet& t, const GradingSpec& g, const EvenSubalgebra& e);

using Rational = boost::rational<long long>;

struct OffDiagonalProblem {
    Ring k1 = Ring::R;
    Ring k2 = Ring::R;
    int r1 = 1;
    int r2 = 1;
    /// Complements r_1', r_2'; zero when absent.
    int r1c = 0;
    int r2c = 0;
};

/// d_i: 1, 2, 1/2 for R, C, H.
Rational d_coefficient(Ring k);

/// M_{r1}(K1) (+) M_{r1'}(K1) (+) M_{r2}(K2) (+) M_{r2'}(K2) acting on
/// C^{r1} (+) C^{r1'} (+) C^{r2} (+) C^{r2'}; empty summands dropped.
Algebra offdiag_algebra(const OffDiagonalProblem& p);

/// Partial isometry C^{r1} -> C^{r2} of rank r whose support and image are
/// K-linear (or an H-linear subspace plus one complex line when r is odd).
cmat compatible_partial_isometry(const OffDiagonalProblem& p, int r);

struct ATReport {
    /// Real dimension of A(T) and of A_0(T).
    long long dim = 0;
    long long dim0 = 0;
    /// Real dimension of the displayed A_0(T) decomposition; set when a
    /// displayed case applies to the rank.
    std::optional<long long> displayed_dim0;
};

/// Brute-force commutant {bT = Ta, b*T = Ta*}; throws InputError when T is not
/// a partial isometry C^{r1} -> C^{r2}.
ATReport A_of_T(const OffDiagonalProblem& p, const cmat& T, double tol = 1e-10);

/// Printed d(r); throws InputError when no listed case (or its mirror) applies.
Rational d_of_r(const OffDiagonalProblem& p, int r);
/// Listed case number 1-4, negated when reached through the 1 <-> 2 mirror, 0 when uncovered.
int d_case(const OffDiagonalProblem& p, int r);

struct TableComparison {
    /// Exception case 1-12 of the published table, 0 for the default {1}.
    int table_case = 0;
    std::set<int> table;
    bool agrees = false;
};

struct RMaxResult {
    std::set<int> r_max;
    Rational best{0};
    std::vector<std::pair<int, Rational>> values;
    /// Ranks with no applicable formula; they are left out of the argmax.
    std::vector<int> uncovered;
    TableComparison comparison;
};

std::set<int> published_r_max(Ring k1, Ring k2, int r1, int r2, int* table_case = nullptr);

RMaxResult r_max(const OffDiagonalProblem& p);

/// The four (r1|r1') x (r2|r2') domain-range variants with positive sizes.
std::vector<std::pair<std::string, OffDiagonalProblem>> domain_variants(const OffDiagonalProblem& p);

}  // namespace spectre
