#pragma once

// Order-one Dirac operators on structured bimodules.

#include "spectre/real_structure.hpp"

#include <array>
#include <map>
#include <optional>

namespace spectre {

/// Blocks of a realized space with offsets into the whole space.
using Layout = std::vector<Block>;

Layout layout_of(const Bimodule& h);
/// Even blocks followed by odd blocks.
Layout layout_of(const StructuredBimodule& s);

/// max over basis pairs of ||[[D, lambda(a)], rho(b)]||.
double order_one_defect(const cmat& d, const StructuredBimodule& s);

/// Haar averages over U(A) acting on the left (first leg) or right (third leg).
cmat project_left(const cmat& t, const Layout& src, const Layout& dst);
cmat project_right(const cmat& t, const Layout& src, const Layout& dst);

enum class DiracKind { Odd, Even, RealOdd, RealEven04, RealEven26 };

DiracKind kind_of(const StructuredBimodule& s);
std::string kind_name(DiracKind k);

/// Free parameters. M keys are (alpha, beta, gamma) for M^gamma_{alpha beta},
/// N keys are (alpha, beta, delta) for N^delta_{alpha beta}.
struct DiracComponents {
    std::map<std::array<int, 3>, cmat> M;
    std::map<std::array<int, 3>, cmat> N;
};

/// Expected component shapes for the given structure: (rows, cols) per key.
struct ComponentShapes {
    std::map<std::array<int, 3>, std::pair<int, int>> M;
    std::map<std::array<int, 3>, std::pair<int, int>> N;
    /// Keys whose component must be self-adjoint.
    std::vector<std::array<int, 3>> self_adjoint_M, self_adjoint_N;
    /// M keys whose first leg must be traceless (gauge fixing).
    std::vector<std::array<int, 3>> traceless_M;
};

ComponentShapes component_shapes(const StructuredBimodule& s);

DiracComponents random_components(const StructuredBimodule& s, std::uint64_t seed);

/// Throws InputError on shape or constraint violations.
cmat assemble_dirac(const DiracComponents& c, const StructuredBimodule& s);

/// Right-linear pre-image to Dirac operator. For odd structures M acts on H;
/// for even ones M maps H_even -> H_odd and the result is [[0, R(M)*], [R(M), 0]].
cmat apply_Rn(const cmat& m, const StructuredBimodule& s);
/// R_n(M) itself (the even -> odd block for even structures).
cmat Rn_map(const cmat& m, const StructuredBimodule& s);

struct RelationDefects {
    double self_adjoint = 0;
    double order_one = 0;
    double grading = 0;  // ||{D, gamma}||
    double real = 0;     // ||DJ - eps' JD||
};

RelationDefects dirac_defects(const cmat& d, const StructuredBimodule& s);

struct KernelBasis {
    long long real_dim = 0;  // from the kernel lemmas
    /// Real basis of ker R_n (operators on H, or H_even -> H_odd).
    std::vector<cmat> basis;
};

KernelBasis kernel_basis_Rn(const StructuredBimodule& s);

/// Structural real dimensions.
long long dirac_dim(const Algebra& a, const IntMatrix& m);
long long dirac_dim(const Algebra& a, const EvenPair& p);
long long dirac_dim(const Algebra& a, const IntMatrix& m, int n);
long long dirac_dim(const Algebra& a, const EvenPair& p, int n);
long long kernel_dim(const IntMatrix& m, int n);
long long kernel_dim(const EvenPair& p, int n);
long long dirac_dim(const StructuredBimodule& s);
long long kernel_dim(const StructuredBimodule& s);
long long unitary_group_dim(const StructuredBimodule& s);

struct DiracSpaceReport {
    long long dim_D0 = 0;
    long long dim_U = 0;
    std::optional<long long> dim_kernel;
    std::optional<long long> moduli_estimate;
    bool moduli_is_generic_estimate = true;
    std::optional<long long> oracle_D0, oracle_U, oracle_kernel;
};

DiracSpaceReport dirac_space_dim(const StructuredBimodule& s, bool with_oracle, std::optional<std::uint64_t> seed);

/// Real spanning set of D_0 obtained by assembling single real parameters.
std::vector<cmat> dirac_spanning_set(const StructuredBimodule& s);

/// Dimension of {D in D_0 : [D, lambda(c)] = [D, rho(c)] = 0 for c in gens}.
/// gens must span a *-subalgebra; throws InputError otherwise.
long long constrained_dirac_dim(const StructuredBimodule& s, const std::vector<Element>& gens);

/// Real basis of the Lie algebra of the structure-preserving left-right unitaries.
std::vector<cmat> unitary_lie_basis(const StructuredBimodule& s);

/// dim D_0 - rank of X -> [X, D] at a seeded random D.
long long moduli_dim_estimate(const StructuredBimodule& s, std::uint64_t seed);

struct GaugeResult {
    cmat A;
    double residual = 0;
    bool vacuous = false;  // single summand: the i != j sum is empty
};

/// A = -sum_{i != j} lambda(e_i)[D, lambda(e_j)] and ||D + A + J A J*||.
GaugeResult gauge_trivialize(const cmat& d, const StructuredBimodule& s);

}  // namespace spectre
