#include "spectre/classify.hpp"

#include "spectre/brute.hpp"

#include <cmath>
#include <random>

namespace spectre {

namespace {

bool is_linear(const Algebra& a, int alpha) { return !a.spectrum()[alpha].conjugate; }

std::vector<cmat> left_basis(const StructuredBimodule& s) {
    std::vector<cmat> out;
    for (const auto& b : algebra_basis(s.algebra())) out.push_back(s.left(b));
    return out;
}

/// Offset and size of block (alpha, beta) in the realization.
std::pair<Eigen::Index, Eigen::Index> block_range(const StructuredBimodule& s, int alpha, int beta) {
    const Bimodule& h = s.h.even;
    int i = h.block_index(alpha, beta);
    if (i < 0) throw InputError("block absent from the triplet");
    return {h.blocks()[i].offset, h.blocks()[i].size()};
}

IrreducibleTriplet make_triplet(const Algebra& a, int ko, int alpha, int beta) {
    IrreducibleTriplet t;
    t.algebra = a;
    t.ko = ko;
    t.alpha = alpha;
    t.beta = beta;
    const int s = a.spectrum_size();
    t.m = IntMatrix::Zero(s, s);
    if (alpha == beta) {
        t.type = TripletType::A;
        t.m(alpha, alpha) = ko_signs(ko).eps == 1 ? 1 : 2;
    } else {
        t.type = TripletType::B;
        t.m(alpha, beta) = 1;
        t.m(beta, alpha) = 1;
    }
    return t;
}

bool faithful_support(const Algebra& a, int alpha, int beta) {
    for (int i = 0; i < a.num_summands(); ++i)
        if (a.summand_of(alpha) != i && a.summand_of(beta) != i) return false;
    return true;
}

}  // namespace

std::vector<IrreducibleTriplet> classify_irreducible(const Algebra& a, int ko) {
    if (ko < 0 || ko > 7 || ko % 2 == 0) throw InputError("classification needs an odd KO-dimension");
    std::vector<IrreducibleTriplet> out;
    const int s = a.spectrum_size();
    // The commutant is a single R, H or C term exactly for these supports.
    for (int alpha = 0; alpha < s; ++alpha)
        for (int beta = alpha; beta < s; ++beta) {
            if (!is_linear(a, alpha) || !is_linear(a, beta)) continue;
            if (!faithful_support(a, alpha, beta)) continue;
            IrreducibleTriplet t = make_triplet(a, ko, alpha, beta);
            if (!is_separating(t)) continue;
            out.push_back(std::move(t));
        }
    return out;
}

bool is_separating(const IrreducibleTriplet& t) {
    if (t.type == TripletType::A) return true;
    return t.algebra.n(t.alpha) == t.algebra.n(t.beta);
}

SeparatingWitness separating_witness(const IrreducibleTriplet& t) {
    StructuredBimodule s = t.realize();
    SeparatingWitness w;
    w.xi = cvec::Zero(s.dim());
    for (const auto& b : s.h.even.blocks()) {
        const Eigen::Index inner = Eigen::Index(b.mult) * b.nb;
        for (int i = 0; i < std::min(b.na, b.nb); ++i) w.xi(b.offset + i * inner + i) = 1.0;
    }
    auto basis = left_basis(s);
    cmat ops(s.dim() * s.dim(), Eigen::Index(basis.size()));
    cmat orbit(s.dim(), Eigen::Index(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ops.col(i) = vec(basis[i]);
        orbit.col(i) = basis[i] * w.xi;
    }
    w.algebra_dim = rank(ops);
    w.orbit_dim = rank(orbit);
    return w;
}

TripletChecks check_triplet(const IrreducibleTriplet& t) {
    TripletChecks c;
    const Algebra& a = t.algebra;
    c.complex_linear = true;
    for (int alpha = 0; alpha < a.spectrum_size(); ++alpha)
        for (int beta = 0; beta < a.spectrum_size(); ++beta)
            if (t.m(alpha, beta) != 0 && (!is_linear(a, alpha) || !is_linear(a, beta))) c.complex_linear = false;
    StructuredBimodule s = t.realize();
    c.faithful = real_rank(left_basis(s)) == a.real_dim();
    c.separating = separating_witness(t).injective();
    c.commutant_selfadjoint_dim = brute_commutant_selfadjoint_dim(s);
    c.irreducible = c.commutant_selfadjoint_dim == 1;
    return c;
}

SummandGrading summand_grading(Ring ring, int n, int r, bool imaginary) {
    if (n < 1 || r < 0 || r > n) throw InputError("grading signature out of range");
    SummandGrading g{ring, n, imaginary, r, cmat::Zero(n, n)};
    if (imaginary) {
        if (ring == Ring::C) throw InputError("for C the real and imaginary forms coincide; use the real form");
        if (n % 2 != 0 || r != n / 2) throw InputError("an imaginary grading needs n even and r = n/2");
        const int c = n / 2;
        if (ring == Ring::R) {
            g.g.topRightCorner(c, c) = I1 * eye(c);
            g.g.bottomLeftCorner(c, c) = -I1 * eye(c);
        } else {
            g.g.topLeftCorner(c, c) = eye(c);
            g.g.bottomRightCorner(c, c) = -eye(c);
        }
        return g;
    }
    if (ring == Ring::H) {
        if (r % 2 != 0) throw InputError("a quaternionic grading has even signature");
        const int k = n / 2;
        cmat d = cmat::Zero(k, k);
        for (int i = 0; i < k; ++i) d(i, i) = i < r / 2 ? 1.0 : -1.0;
        g.g = quaternion_embed(d, cmat::Zero(k, k));
        return g;
    }
    for (int i = 0; i < n; ++i) g.g(i, i) = i < r ? 1.0 : -1.0;
    return g;
}

std::vector<SummandGrading> summand_gradings(Ring ring, int n) {
    std::vector<SummandGrading> out;
    for (int r = 0; r <= n; ++r) {
        if (ring == Ring::H && r % 2 != 0) continue;
        out.push_back(summand_grading(ring, n, r, false));
    }
    if (ring != Ring::C && n % 2 == 0) out.push_back(summand_grading(ring, n, n / 2, true));
    return out;
}

std::string family_name(GradingFamily f) {
    switch (f) {
        case GradingFamily::TypeA: return "type-A";
        case GradingFamily::Diagonal: return "diagonal";
        case GradingFamily::OffDiagonal: return "off-diagonal";
    }
    return "";
}

GradingSpec type_a_grading(const IrreducibleTriplet& t, const SummandGrading& g, int sign) {
    if (t.type != TripletType::A) throw InputError("type A grading on a type B triplet");
    if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
    StructuredBimodule s = t.realize();
    GradingSpec out;
    out.family = GradingFamily::TypeA;
    out.eps2 = 1;
    out.sign = sign;
    out.g = {g};
    const int mult = static_cast<int>(t.m(t.alpha, t.alpha));
    out.gamma = double(sign) * kron(g.g, kron(eye(mult), cmat(g.g.transpose())));
    if (out.gamma.rows() != s.dim()) throw InputError("grading size does not match the triplet");
    return out;
}

GradingSpec diagonal_grading(const IrreducibleTriplet& t, const SummandGrading& g1, const SummandGrading& g2,
                             int eps2) {
    if (t.type != TripletType::B) throw InputError("diagonal grading needs a type B triplet");
    if (eps2 != 1 && eps2 != -1) throw InputError("eps'' must be +1 or -1");
    StructuredBimodule s = t.realize();
    GradingSpec out;
    out.family = GradingFamily::Diagonal;
    out.eps2 = eps2;
    out.g = {g1, g2};
    out.gamma = cmat::Zero(s.dim(), s.dim());
    auto [o12, n12] = block_range(s, t.alpha, t.beta);
    auto [o21, n21] = block_range(s, t.beta, t.alpha);
    cmat a = kron(g1.g, cmat(g2.g.transpose()));
    cmat b = double(eps2) * kron(g2.g, cmat(g1.g.transpose()));
    if (a.rows() != n12 || b.rows() != n21) throw InputError("grading size does not match the triplet");
    out.gamma.block(o12, o12, n12, n12) = a;
    out.gamma.block(o21, o21, n21, n21) = b;
    return out;
}

GradingSpec offdiagonal_grading(const IrreducibleTriplet& t, const cmat& u, cplx eta) {
    if (t.type != TripletType::B) throw InputError("off-diagonal grading needs a type B triplet");
    const Algebra& a = t.algebra;
    const auto& s1 = a.summands()[a.summand_of(t.alpha)];
    const auto& s2 = a.summands()[a.summand_of(t.beta)];
    if (s1.ring != s2.ring || s1.k != s2.k) throw InputError("off-diagonal grading needs K_1 = K_2 and k_1 = k_2");
    if (std::abs(std::abs(eta) - 1.0) > kTol) throw InputError("eta must have modulus 1");
    Algebra one({s1});
    Element x{{u}};
    check_element(one, x);
    if (op_norm(u.adjoint() * u - eye(u.rows())) > kTol) throw InputError("u is not unitary");
    StructuredBimodule s = t.realize();
    GradingSpec out;
    out.family = GradingFamily::OffDiagonal;
    // gamma J = eps J gamma here, so the sign is forced by J^2
    out.eps2 = ko_signs(t.ko).eps;
    out.u = u;
    out.eta = eta;
    out.gamma = cmat::Zero(s.dim(), s.dim());
    auto [o12, n12] = block_range(s, t.alpha, t.beta);
    auto [o21, n21] = block_range(s, t.beta, t.alpha);
    cmat c = eta * kron(u, cmat(u.transpose()));
    out.gamma.block(o21, o12, n21, n12) = c;
    out.gamma.block(o12, o21, n12, n21) = c.adjoint();
    return out;
}

GradingCheck check_grading(const IrreducibleTriplet& t, const GradingSpec& g) {
    StructuredBimodule s = t.realize();
    const cmat& x = g.gamma;
    GradingCheck c;
    c.selfadjoint_defect = op_norm(x - x.adjoint());
    c.unitary_defect = op_norm(x * x - eye(x.rows()));
    c.real_structure_defect = op_norm(x * s.J.U - double(g.eps2) * s.J.U * x.conjugate());
    auto basis = left_basis(s);
    auto ortho = real_span_basis(basis);
    for (const auto& b : basis) {
        cmat y = x * b * x;
        cmat r = y;
        for (const auto& o : ortho) r -= (o.conjugate().cwiseProduct(y)).sum().real() * o;
        c.algebra_defect = std::max(c.algebra_defect, r.norm());
    }
    return c;
}

std::vector<GradingSpec> compatible_gradings(const IrreducibleTriplet& t, std::optional<int> eps2,
                                             std::uint64_t seed) {
    std::vector<GradingSpec> out;
    const Algebra& a = t.algebra;
    if (t.type == TripletType::A) {
        if (eps2 && *eps2 != 1) return out;
        const auto& sm = a.summands()[a.summand_of(t.alpha)];
        for (const auto& g : summand_gradings(sm.ring, sm.n()))
            for (int sign : {1, -1}) out.push_back(type_a_grading(t, g, sign));
        return out;
    }
    const auto& s1 = a.summands()[a.summand_of(t.alpha)];
    const auto& s2 = a.summands()[a.summand_of(t.beta)];
    for (int e : {1, -1}) {
        if (eps2 && *eps2 != e) continue;
        for (const auto& g1 : summand_gradings(s1.ring, s1.n()))
            for (const auto& g2 : summand_gradings(s2.ring, s2.n())) out.push_back(diagonal_grading(t, g1, g2, e));
    }
    if ((!eps2 || *eps2 == ko_signs(t.ko).eps) && s1.ring == s2.ring && s1.k == s2.k) {
        out.push_back(offdiagonal_grading(t, eye(s1.n()), 1.0));
        Algebra one({s1});
        cmat u = random_unitary(one, seed).blocks[0];
        std::mt19937_64 rng(seed);
        double theta = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
        out.push_back(offdiagonal_grading(t, u, std::polar(1.0, theta)));
    }
    return out;
}

int even_case(const GradingSpec& g) {
    if (g.family != GradingFamily::Diagonal || g.g.size() != 2)
        throw InputError("even subalgebra needs a grading from the diagonal family");
    const auto& g1 = g.g[0];
    const auto& g2 = g.g[1];
    if (g1.r == 0 || g2.r == 0) throw InputError("normalization requires r_1 > 0 and r_2 > 0");
    const bool one1 = !g1.imaginary && g1.r == g1.n;
    const bool one2 = !g2.imaginary && g2.r == g2.n;
    if (g2.imaginary && !g1.imaginary) throw InputError("normalization requires gamma_1 imaginary when gamma_2 is");
    if (one1 && !one2) throw InputError("normalization requires gamma_2 = 1 when gamma_1 = 1");
    if (g1.imaginary && g2.imaginary) return 1;
    if (g1.imaginary && !one2) return 2;
    if (g1.imaginary) return 3;
    if (!one1 && !one2) return 4;
    if (!one1) return 5;
    return 6;
}

namespace {

int part_size(Ring ring, int dim) { return ring == Ring::H ? dim / 2 : dim; }

/// Embed a block for a part of a graded summand; parts in order (r, n - r).
cmat embed_parts(Ring ring, const SummandGrading& g, const std::vector<cmat>& blocks) {
    const int n = g.n;
    if (g.imaginary) {
        const cmat& a = blocks[0];
        if (ring == Ring::H) return quaternion_embed(a, cmat::Zero(a.rows(), a.cols()));
        const int c = n / 2;
        cmat out(n, n);
        out.topLeftCorner(c, c) = a.real().cast<cplx>();
        out.topRightCorner(c, c) = -a.imag().cast<cplx>();
        out.bottomLeftCorner(c, c) = a.imag().cast<cplx>();
        out.bottomRightCorner(c, c) = a.real().cast<cplx>();
        return out;
    }
    if (blocks.size() == 1) return blocks[0];
    if (ring != Ring::H) return block_diag(blocks[0], blocks[1]);
    const Eigen::Index p = blocks[0].rows() / 2, q = blocks[1].rows() / 2;
    auto z1 = [](const cmat& b, Eigen::Index k) { return cmat(b.topLeftCorner(k, k)); };
    auto z2 = [](const cmat& b, Eigen::Index k) { return cmat(b.topRightCorner(k, k)); };
    return quaternion_embed(block_diag(z1(blocks[0], p), z1(blocks[1], q)),
                            block_diag(z2(blocks[0], p), z2(blocks[1], q)));
}

/// Summands of A^even contributed by a graded summand of A.
std::vector<Summand> even_summands(const Summand& s, const SummandGrading& g) {
    if (g.imaginary) return {Summand{Ring::C, g.n / 2}};
    if (g.r == g.n) return {s};
    return {Summand{s.ring, part_size(s.ring, g.r)}, Summand{s.ring, part_size(s.ring, g.n - g.r)}};
}

}  // namespace

EvenSubalgebra even_subalgebra(const IrreducibleTriplet& t, const GradingSpec& g) {
    if (t.type != TripletType::B) throw InputError("even subalgebra needs a type B triplet");
    if (g.eps2 != -1) throw InputError("even subalgebra needs a grading anticommuting with J");
    EvenSubalgebra e;
    e.case_number = even_case(g);
    const Algebra& a = t.algebra;
    const int i1 = a.summand_of(t.alpha), i2 = a.summand_of(t.beta);
    const Summand s1 = a.summands()[i1], s2 = a.summands()[i2];
    auto p1 = even_summands(s1, g.g[0]);
    auto p2 = even_summands(s2, g.g[1]);
    std::vector<Summand> all = p1;
    all.insert(all.end(), p2.begin(), p2.end());
    e.algebra = Algebra(all);
    const Algebra& ae = e.algebra;
    const int sz = ae.spectrum_size();
    IntMatrix m = IntMatrix::Zero(sz, sz);
    auto lin = [&](int i) { return ae.linear_point(i); };
    auto bar = [&](int i) { return ae.conjugate_point(i); };
    switch (e.case_number) {
        case 1:  // c_1, c_2
            m(lin(0), lin(1)) = 1;
            m(bar(0), bar(1)) = 1;
            m(lin(1), bar(0)) = 1;
            m(bar(1), lin(0)) = 1;
            break;
        case 2:  // c, r_2, r_2'
            m(lin(0), lin(1)) = 1;
            m(bar(0), lin(2)) = 1;
            m(lin(1), bar(0)) = 1;
            m(lin(2), lin(0)) = 1;
            break;
        case 3:  // c, n
            m(lin(0), lin(1)) = 1;
            m(lin(1), bar(0)) = 1;
            break;
        case 4:  // r_1, r_1', r_2, r_2'
            m(lin(0), lin(2)) = 1;
            m(lin(1), lin(3)) = 1;
            m(lin(2), lin(1)) = 1;
            m(lin(3), lin(0)) = 1;
            break;
        case 5:  // r_1, r_1', n
            m(lin(0), lin(2)) = 1;
            m(lin(2), lin(1)) = 1;
            break;
        case 6:
            m(lin(0), lin(1)) = 1;
            break;
    }
    e.pair = {m, IntMatrix(m.transpose())};
    const int n1 = static_cast<int>(p1.size());
    const int total = a.num_summands();
    const SummandGrading g1 = g.g[0], g2 = g.g[1];
    e.embed = [=](const Element& x) {
        Element y;
        y.blocks.resize(total);
        std::vector<cmat> b1(x.blocks.begin(), x.blocks.begin() + n1);
        std::vector<cmat> b2(x.blocks.begin() + n1, x.blocks.end());
        y.blocks[i1] = embed_parts(s1.ring, g1, b1);
        y.blocks[i2] = embed_parts(s2.ring, g2, b2);
        return y;
    };
    return e;
}

EvenCrossCheck cross_check_even(const IrreducibleTriplet& t, const GradingSpec& g, const EvenSubalgebra& e) {
    EvenCrossCheck c;
    StructuredBimodule s = t.realize();
    const cmat& gamma = g.gamma;
    c.structural_dim = e.algebra.real_dim();
    c.commutant_dim = real_nullity(left_basis(s), [&](const cmat& x) { return cmat(x * gamma - gamma * x); });
    c.embed_defect = homomorphism_defect(e.algebra, t.algebra, e.embed);
    for (const auto& b : algebra_basis(e.algebra)) {
        cmat l = s.left(e.embed(b));
        c.commute_defect = std::max(c.commute_defect, op_norm(l * gamma - gamma * l));
    }
    const Eigen::Index d = s.dim();
    auto part = [&](double sign) {
        cmat q = projection_range((eye(d) + sign * gamma) * 0.5);
        Action left = [&, q](const Element& x) { return cmat(q.adjoint() * s.left(e.embed(x)) * q); };
        Action right = [&, q](const Element& x) { return cmat(q.adjoint() * s.right(e.embed(x)) * q); };
        return multiplicity_of(e.algebra, q.cols(), left, right);
    };
    c.computed = {part(1.0), part(-1.0)};
    c.pairs_match = c.computed.even == e.pair.even && c.computed.odd == e.pair.odd;
    return c;
}

Rational d_coefficient(Ring k) {
    switch (k) {
        case Ring::R: return Rational(1);
        case Ring::C: return Rational(2);
        case Ring::H: return Rational(1, 2);
    }
    return Rational(0);
}

namespace {

void check_sizes(const OffDiagonalProblem& p) {
    if (p.r1 < 1 || p.r2 < 1 || p.r1c < 0 || p.r2c < 0) throw InputError("r_1, r_2 must be positive");
    auto even_for_h = [](Ring k, int r) { return k != Ring::H || r % 2 == 0; };
    if (!even_for_h(p.k1, p.r1) || !even_for_h(p.k1, p.r1c) || !even_for_h(p.k2, p.r2) || !even_for_h(p.k2, p.r2c))
        throw InputError("quaternionic eigenspaces have even complex dimension");
}

/// Real dimension of M_k(K) acting on C^dim.
long long matrix_real_dim(Ring k, long long dim) { return k == Ring::C ? 2 * dim * dim : dim * dim; }

int direct_case(Ring k1, Ring k2, int r) {
    if ((k1 == k2 || k2 == Ring::C) && (k1 != Ring::H || r % 2 == 0)) return 1;
    if (k1 == Ring::H && r % 2 == 1) {
        if (k2 == Ring::R) return 2;
        if (k2 == Ring::C) return 3;
        if (k2 == Ring::H) return 4;
    }
    return 0;
}

Rational sq(Rational x) { return x * x; }

Rational direct_d(int c, Ring k1, Ring k2, int r1, int r2, int r) {
    const Rational d1 = d_coefficient(k1), d2 = d_coefficient(k2), half(1, 2);
    const Rational R(r);
    switch (c) {
        case 1: return d1 * sq(R) + d1 * sq(R - r1) + d2 * sq(R - r2);
        case 2: return sq(R - 1) + 1 + half * sq(R - r2 + 1) + sq(R - r1);
        case 3: return half * sq(R - 1) + 2 + half * sq(R - r2 + 1) + 2 * sq(R - r1);
        case 4: return half * sq(R - 1) + 2 + half * sq(R - r1 + 1) + half * sq(R - r2 + 1);
    }
    throw InputError("no d(r) case");
}

/// Real dimension of the displayed A_0(T) decomposition, evaluated as printed.
std::optional<long long> direct_displayed(int c, Ring k1, Ring k2, int r1, int r2, int r) {
    auto h = [](long long twice) -> std::optional<long long> {
        // M_{twice/2}(H): real dimension twice^2, defined for even, nonnegative twice
        if (twice < 0 || twice % 2 != 0) return std::nullopt;
        return twice * twice;
    };
    switch (c) {
        case 1:
            if (r1 < r || r2 < r) return std::nullopt;
            return matrix_real_dim(k1, r) + matrix_real_dim(k1, r1 - r) + matrix_real_dim(k2, r2 - r);
        case 2: {
            auto x = h(r2 - r - 1);
            if (!x || r1 < r) return std::nullopt;
            return (long long)(r - 1) * (r - 1) + 1 + *x + (long long)(r1 - r) * (r1 - r);
        }
        case 3: {
            auto x = h(r2 - r - 1);
            if (!x || r1 < r) return std::nullopt;
            return (long long)(r - 1) * (r - 1) + 2 + *x + 2LL * (r1 - r) * (r1 - r);
        }
        case 4: {
            auto x = h(r1 - r - 1), y = h(r2 - r - 1);
            if (!x || !y) return std::nullopt;
            return (long long)(r - 1) * (r - 1) + 2 + *x + *y;
        }
    }
    return std::nullopt;
}

Summand summand_on(Ring k, int dim) { return Summand{k, part_size(k, dim)}; }

/// Summand indices of C^{r1} and C^{r2} in offdiag_algebra(p).
std::pair<int, int> offdiag_positions(const OffDiagonalProblem& p) { return {0, p.r1c > 0 ? 2 : 1}; }

/// Coordinates of a K-linear subspace of C^dim of complex dimension r.
std::vector<int> compatible_coords(Ring k, int dim, int r) {
    std::vector<int> out;
    if (k != Ring::H) {
        for (int i = 0; i < r; ++i) out.push_back(i);
        return out;
    }
    const int h = dim / 2, q = r / 2;
    for (int i = 0; i < q; ++i) out.push_back(i);
    for (int i = 0; i < q; ++i) out.push_back(h + i);
    if (r % 2 == 1) out.push_back(q);
    return out;
}

long long at_dim(const Algebra& a, int i1, int i2, const cmat& T) {
    const int ns = a.num_summands();
    std::vector<Eigen::Index> offs(ns + 1, 0);
    for (int i = 0; i < ns; ++i) offs[i + 1] = offs[i] + a.summands()[i].n();
    std::vector<cmat> basis;
    for (const auto& b : algebra_basis(a)) {
        cmat x = cmat::Zero(offs[ns], offs[ns]);
        for (int i = 0; i < ns; ++i) x.block(offs[i], offs[i], b.blocks[i].rows(), b.blocks[i].cols()) = b.blocks[i];
        basis.push_back(x);
    }
    auto cons = [&](const cmat& x) {
        cmat av = x.block(offs[i1], offs[i1], offs[i1 + 1] - offs[i1], offs[i1 + 1] - offs[i1]);
        cmat bv = x.block(offs[i2], offs[i2], offs[i2 + 1] - offs[i2], offs[i2 + 1] - offs[i2]);
        cmat out(2 * T.rows(), T.cols());
        out.topRows(T.rows()) = bv * T - T * av;
        out.bottomRows(T.rows()) = bv.adjoint() * T - T * av.adjoint();
        return out;
    };
    return real_nullity(basis, cons);
}

}  // namespace

Algebra offdiag_algebra(const OffDiagonalProblem& p) {
    check_sizes(p);
    std::vector<Summand> s{summand_on(p.k1, p.r1)};
    if (p.r1c > 0) s.push_back(summand_on(p.k1, p.r1c));
    s.push_back(summand_on(p.k2, p.r2));
    if (p.r2c > 0) s.push_back(summand_on(p.k2, p.r2c));
    return Algebra(s);
}

cmat compatible_partial_isometry(const OffDiagonalProblem& p, int r) {
    check_sizes(p);
    if (r < 0 || r > std::min(p.r1, p.r2)) throw InputError("rank out of range");
    auto sup = compatible_coords(p.k1, p.r1, r);
    auto img = compatible_coords(p.k2, p.r2, r);
    cmat t = cmat::Zero(p.r2, p.r1);
    for (int i = 0; i < r; ++i) t(img[i], sup[i]) = 1.0;
    return t;
}

ATReport A_of_T(const OffDiagonalProblem& p, const cmat& T, double tol) {
    check_sizes(p);
    if (T.rows() != p.r2 || T.cols() != p.r1) throw InputError("T must map C^{r1} to C^{r2}");
    cmat tt = T.adjoint() * T;
    if (op_norm(tt * tt - tt) > tol) throw InputError("T is not a partial isometry");
    ATReport rep;
    Algebra full = offdiag_algebra(p);
    auto [i1, i2] = offdiag_positions(p);
    rep.dim = at_dim(full, i1, i2, T);
    Algebra a0({summand_on(p.k1, p.r1), summand_on(p.k2, p.r2)});
    rep.dim0 = at_dim(a0, 0, 1, T);
    const int r = static_cast<int>(rank(T));
    if (r >= 1) {
        int c = d_case(p, r);
        if (c > 0) rep.displayed_dim0 = direct_displayed(c, p.k1, p.k2, p.r1, p.r2, r);
        if (c < 0) rep.displayed_dim0 = direct_displayed(-c, p.k2, p.k1, p.r2, p.r1, r);
    }
    return rep;
}

int d_case(const OffDiagonalProblem& p, int r) {
    if (int c = direct_case(p.k1, p.k2, r)) return c;
    if (int c = direct_case(p.k2, p.k1, r)) return -c;
    return 0;
}

Rational d_of_r(const OffDiagonalProblem& p, int r) {
    check_sizes(p);
    if (r < 1 || r > std::min(p.r1, p.r2)) throw InputError("r must lie in 1..min(r_1, r_2)");
    const int c = d_case(p, r);
    if (c > 0) return direct_d(c, p.k1, p.k2, p.r1, p.r2, r);
    if (c < 0) return direct_d(-c, p.k2, p.k1, p.r2, p.r1, r);
    throw InputError(std::string("no listed d(r) case covers (") + ring_char(p.k1) + "," + ring_char(p.k2) +
                     ") with r " + (r % 2 ? "odd" : "even"));
}

std::set<int> published_r_max(Ring k1, Ring k2, int r1, int r2, int* table_case) {
    using R = Ring;
    struct Row {
        R a, b;
        int r1, r2;  // 0 matches anything
        std::set<int> v;
    };
    static const std::vector<Row> rows = {
        {R::C, R::C, 2, 2, {2}},    {R::C, R::C, 3, 3, {1, 2}}, {R::C, R::R, 2, 2, {1, 2}},
        {R::C, R::H, 2, 2, {1, 2}}, {R::R, R::C, 2, 2, {1, 2}}, {R::R, R::R, 2, 2, {2}},
        {R::R, R::R, 3, 3, {1, 2}}, {R::R, R::H, 2, 0, {1, 2}}, {R::H, R::C, 2, 2, {1, 2}},
        {R::H, R::R, 0, 2, {1, 2}}, {R::H, R::H, 4, 4, {4}},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& w = rows[i];
        if (w.a == k1 && w.b == k2 && (w.r1 == 0 || w.r1 == r1) && (w.r2 == 0 || w.r2 == r2)) {
            if (table_case) *table_case = static_cast<int>(i) + 1;
            return w.v;
        }
    }
    if (k1 == R::H && k2 == R::H) {
        if (table_case) *table_case = 12;
        return {2};
    }
    if (table_case) *table_case = 0;
    return {1};
}

RMaxResult r_max(const OffDiagonalProblem& p) {
    check_sizes(p);
    RMaxResult res;
    bool any = false;
    for (int r = 1; r <= std::min(p.r1, p.r2); ++r) {
        if (d_case(p, r) == 0) {
            res.uncovered.push_back(r);
            continue;
        }
        Rational v = d_of_r(p, r);
        res.values.push_back({r, v});
        if (!any || v > res.best) {
            res.best = v;
            res.r_max = {r};
            any = true;
        } else if (v == res.best) {
            res.r_max.insert(r);
        }
    }
    res.comparison.table = published_r_max(p.k1, p.k2, p.r1, p.r2, &res.comparison.table_case);
    res.comparison.agrees = res.comparison.table == res.r_max;
    return res;
}

std::vector<std::pair<std::string, OffDiagonalProblem>> domain_variants(const OffDiagonalProblem& p) {
    std::vector<std::pair<std::string, OffDiagonalProblem>> out;
    const std::vector<std::pair<int, int>> sizes1 = {{p.r1, p.r1c}, {p.r1c, p.r1}};
    const std::vector<std::pair<int, int>> sizes2 = {{p.r2, p.r2c}, {p.r2c, p.r2}};
    const char* n1[] = {"r1", "r1'"};
    const char* n2[] = {"r2", "r2'"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (sizes1[i].first == 0 || sizes2[j].first == 0) continue;
            OffDiagonalProblem q{p.k1, p.k2, sizes1[i].first, sizes2[j].first, sizes1[i].second, sizes2[j].second};
            out.push_back({std::string(n1[i]) + "," + n2[j], q});
        }
    return out;
}

}  // namespace spectre
