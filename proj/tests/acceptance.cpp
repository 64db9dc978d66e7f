// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include "spectre/brute.hpp"
#include "spectre/ccm.hpp"
#include "spectre/classify.hpp"
#include "spectre/dirac.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace spectre;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

IntMatrix mat3(std::initializer_list<long long> v) {
    IntMatrix m(3, 3);
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = *it++;
    return m;
}

std::string show(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    os << "]";
    return os.str();
}

std::string show(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------- 1, 2 ----------

Outcome sm_matrices() {
    Outcome o;
    for (int n : {1, 3}) {
        auto t0 = Clock::now();
        SMFixture fx = build_sm(n);
        const double t = seconds_since(t0);
        for (const auto& c : fx.checks)
            o.require(c.pass(), "N=" + std::to_string(n) + " " + c.name + ": expected " + show(c.expected) +
                                    " computed " + show(c.computed));
        o.require(fx.cap.form == 2 * fx.mu_hat, "N=" + std::to_string(n) + " cap = 2 mu_hat");
        o.require(fx.cap_E.form == 2 * fx.mu_E_hat, "N=" + std::to_string(n) + " cap_E = 2 mu_E_hat");
        o.require(fx.cap_F.form == 2 * n * mat3({0, -1, -1, 1, 0, 1, 1, -1, 0}),
                  "N=" + std::to_string(n) + " cap_F " + show(fx.cap_F.form));
        o.require(fx.cap_f.form == 2 * n * mat3({-1, 0, -1, 1, 0, 1, 0, 0, 0}),
                  "N=" + std::to_string(n) + " cap_f " + show(fx.cap_f.form));
        o.require(t < 1.0, "N=" + std::to_string(n) + " took " + std::to_string(t) + " s");
        o.note("N=" + std::to_string(n) + ": " + std::to_string(fx.checks.size()) + " matrices, cap_F " +
               show(fx.cap_F.form) + ", " + std::to_string(t) + " s");
    }
    return o;
}

Outcome degeneracy() {
    Outcome o;
    SMFixture fx = build_sm(1);
    o.require(!exact_nonsingular(fx.mu_hat), "mu_hat degenerate");
    o.require(!exact_nonsingular(fx.mu_E_hat), "mu_E_hat degenerate");
    o.require(!fx.cap_F.nondegenerate, "cap_F degenerate");
    o.require(!fx.cap_f.nondegenerate, "cap_f degenerate");
    o.require(!is_quasi_orientable(fx.pair_F), "H_F over A_F not quasi-orientable");
    auto w = quasi_orientability_witness(fx.pair_F);
    std::string label = w ? "(" + fx.f.point_label(w->first) + "," + fx.f.point_label(w->second) + ")" : "none";
    o.require(label == "(1,1)", "witness (1,1), got " + label);
    o.note("witness " + label + ", det cap_F = " + fx.cap_F.determinant + ", det cap_f = " + fx.cap_f.determinant);
    return o;
}

// ---------- 3 ----------

std::vector<Algebra> oracle_algebras() {
    return {Algebra({{Ring::R, 1}}), Algebra({{Ring::C, 1}}), Algebra({{Ring::H, 1}}),
            Algebra({{Ring::R, 1}, {Ring::R, 1}}), Algebra({{Ring::C, 1}, {Ring::C, 1}}),
            Algebra({{Ring::R, 2}}), Algebra({{Ring::C, 2}})};
}

/// All matrices with entries in 0..2 when there are at most 81 of them, else a seeded sample.
std::vector<IntMatrix> multiplicities(int s, std::mt19937& rng, int sample) {
    std::vector<IntMatrix> out;
    const int cells = s * s;
    long long total = 1;
    for (int i = 0; i < cells; ++i) total *= 3;
    if (total <= 81) {
        for (long long code = 0; code < total; ++code) {
            IntMatrix m(s, s);
            long long c = code;
            for (int i = 0; i < cells; ++i, c /= 3) m(i / s, i % s) = c % 3;
            out.push_back(m);
        }
        return out;
    }
    std::uniform_int_distribution<int> d(0, 2);
    for (int k = 0; k < sample; ++k) {
        IntMatrix m(s, s);
        for (int i = 0; i < cells; ++i) m(i / s, i % s) = d(rng);
        out.push_back(m);
    }
    return out;
}

void compare_dims(Outcome& o, const StructuredBimodule& s, const std::string& tag, int& count) {
    DiracSpaceReport r = dirac_space_dim(s, true, 1);
    if (!r.oracle_D0) return;
    ++count;
    o.require(*r.oracle_D0 == r.dim_D0, tag + " D0 " + std::to_string(r.dim_D0) + " vs " + std::to_string(*r.oracle_D0));
    o.require(r.oracle_U && *r.oracle_U == r.dim_U, tag + " U");
    if (r.dim_kernel) {
        o.require(r.oracle_kernel && *r.oracle_kernel == *r.dim_kernel, tag + " kernel");
        KernelBasis k = kernel_basis_Rn(s);
        o.require(static_cast<long long>(k.basis.size()) == *r.dim_kernel, tag + " kernel basis size");
    }
}

Outcome oracle_equivalence() {
    Outcome o;
    auto t0 = Clock::now();
    std::mt19937 rng(2024);
    int odd = 0, even = 0, linmaps = 0;
    const Eigen::Index cap = brute_cap();
    for (const auto& a : oracle_algebras()) {
        const int s = a.spectrum_size();
        const std::string name = a.describe();
        auto ms = multiplicities(s, rng, 40);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const IntMatrix& m = ms[i];
            Bimodule h(a, m);
            if (h.dim() == 0 || h.dim() > cap) continue;
            const std::string tag = name + " m=" + show(m);
            compare_dims(o, plain_odd(a, m), tag, odd);
            for (int n : {1, 3, 5, 7})
                if (admissible(m, n)) compare_dims(o, canonical_J(a, m, n), tag + " ko " + std::to_string(n), odd);
            const IntMatrix& m2 = ms[(i * 7 + 3) % ms.size()];
            if (h.dim() + Bimodule(a, m2).dim() <= cap) {
                LinmapDims x = linmap_dims(a, m, m2), y = brute_linmap_dims(a, m, m2);
                o.require(x.left == y.left && x.right == y.right && x.both == y.both, tag + " linmap");
                ++linmaps;
            }
        }
        // even pairs: all of them for one spectrum point, seeded samples otherwise
        auto evens = multiplicities(s, rng, s == 1 ? 3 : 30);
        auto odds = multiplicities(s, rng, s == 1 ? 3 : 30);
        const std::size_t pairs = s == 1 ? evens.size() * odds.size() : std::min(evens.size(), std::size_t(30));
        for (std::size_t k = 0; k < pairs; ++k) {
            EvenPair p = s == 1 ? EvenPair{evens[k / odds.size()], odds[k % odds.size()]}
                                : EvenPair{evens[(k * 13) % evens.size()], odds[(k * 29 + 5) % odds.size()]};
            GradedBimodule g = build_graded(a, p);
            if (g.dim() == 0 || g.dim() > cap) continue;
            const std::string tag = name + " even=" + show(p.even) + " odd=" + show(p.odd);
            compare_dims(o, plain_even(a, p), tag, even);
            for (int n : {0, 2, 4, 6})
                if (admissible(p, n)) compare_dims(o, canonical_J(a, p, n), tag + " ko " + std::to_string(n), even);
        }
    }
    const double t = seconds_since(t0);
    o.require(t <= 300.0, "runtime " + std::to_string(t) + " s above 5 min");
    o.note(std::to_string(odd) + " odd and " + std::to_string(even) + " even structures, " + std::to_string(linmaps) +
           " linear-map pairs, " + std::to_string(t) + " s");
    return o;
}

// ---------- 4 ----------

cmat random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    cmat z(r, c);
    for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = cplx(g(rng), g(rng));
    return z;
}

double max_commutator(const cmat& t, const std::vector<cmat>& ops) {
    double out = 0;
    for (const auto& x : ops) out = std::max(out, (t * x - x * t).norm());
    return out;
}

Outcome projector_laws() {
    Outcome o;
    auto t0 = Clock::now();
    const double tol = 1e-10;
    std::vector<std::pair<Algebra, IntMatrix>> fixtures;
    for (const auto& a : oracle_algebras()) {
        const int s = a.spectrum_size();
        IntMatrix m = IntMatrix::Constant(s, s, 1);
        m(0, 0) = 2;
        fixtures.push_back({a, m});
    }
    std::mt19937_64 rng(77);
    double worst = 0;
    for (const auto& [a, m] : fixtures) {
        StructuredBimodule s = plain_odd(a, m);
        Layout lay = layout_of(s);
        std::vector<cmat> lefts, rights;
        for (const auto& b : algebra_basis(a)) {
            lefts.push_back(s.left(b));
            rights.push_back(s.right(b));
        }
        auto el = [&](const cmat& t) { return project_left(t, lay, lay); };
        auto er = [&](const cmat& t) { return project_right(t, lay, lay); };
        for (int k = 0; k < 100; ++k) {
            cmat t = random_matrix(s.dim(), s.dim(), rng);
            cmat l = el(t), r = er(t);
            double d = 0;
            d = std::max(d, (el(l) - l).norm());
            d = std::max(d, (er(r) - r).norm());
            d = std::max(d, (el(r) - er(l)).norm());
            d = std::max(d, max_commutator(l, lefts));
            d = std::max(d, max_commutator(r, rights));
            // order-one operator: left-linear plus right-linear part
            cmat x = l + er(random_matrix(s.dim(), s.dim(), rng));
            d = std::max(d, max_commutator(x - el(x), rights));
            d = std::max(d, max_commutator(x - er(x), lefts));
            d = std::max(d, ((x - er(x)) + el(er(x)) + (x - el(x)) - x).norm());
            // fixed points are exactly the linear maps
            cmat lin = el(random_matrix(s.dim(), s.dim(), rng));
            d = std::max(d, (el(lin) - lin).norm());
            worst = std::max(worst, d / std::max(1.0, t.norm()));
        }
    }
    o.require(worst <= tol, "projector law defect " + sci(worst));

    // traceless first leg averages to zero
    {
        Algebra a({{Ring::C, 2}});
        IntMatrix m = IntMatrix::Zero(2, 2);
        m(1, 1) = 1;
        StructuredBimodule s = plain_odd(a, m);
        Layout lay = layout_of(s);
        cmat d = cmat::Zero(2, 2);
        d(0, 0) = 1;
        d(1, 1) = -1;
        cmat t = kron(d, random_matrix(2, 2, rng));
        o.require(project_left(t, lay, lay).norm() <= tol, "traceless first leg gives zero");
    }

    // Monte-Carlo Haar average against the closed form
    {
        Algebra a({{Ring::C, 2}});
        IntMatrix m(2, 2);
        m << 1, 1, 0, 1;
        StructuredBimodule s = plain_odd(a, m);
        Layout lay = layout_of(s);
        cmat t = random_matrix(s.dim(), s.dim(), rng);
        t /= t.norm();
        cmat avg = cmat::Zero(s.dim(), s.dim());
        const int samples = 10000;
        for (int k = 0; k < samples; ++k) {
            cmat u = s.left(random_unitary(a, 5000 + k));
            avg += u * t * u.adjoint();
        }
        avg /= double(samples);
        const double err = (avg - project_left(t, lay, lay)).norm();
        o.require(err <= 3e-2, "Monte-Carlo error " + sci(err));
        o.note("Monte-Carlo Frobenius error " + sci(err) + " on a unit operator");
    }
    const double t = seconds_since(t0);
    o.require(t < 30.0, "runtime " + std::to_string(t) + " s");
    o.note(std::to_string(fixtures.size()) + " fixtures x 100 operators, worst relative defect " + sci(worst) +
           ", " + std::to_string(t) + " s");
    return o;
}

// ---------- 5 ----------

Outcome real_uniqueness() {
    Outcome o;
    auto t0 = Clock::now();
    std::mt19937 rng(5);
    const std::vector<Algebra> algebras = {Algebra({{Ring::C, 1}, {Ring::R, 1}}), Algebra({{Ring::H, 1}, {Ring::C, 1}}),
                                           Algebra({{Ring::R, 2}, {Ring::C, 1}}), Algebra({{Ring::C, 2}})};
    std::uniform_int_distribution<int> entry(0, 2), pick(0, int(algebras.size()) - 1), ko(0, 7);
    int done = 0, tries = 0;
    double worst = 0;
    while (done < 20 && tries < 10000) {
        ++tries;
        const Algebra& a = algebras[pick(rng)];
        const int s = a.spectrum_size();
        const int n = ko(rng);
        IntMatrix m(s, s), m2(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                m(i, j) = entry(rng);
                m2(i, j) = entry(rng);
            }
        // symmetrize so admissible draws are not too rare
        m = (m + m.transpose()).eval() / 2;
        m2 = (m2 + m2.transpose()).eval() / 2;
        StructuredBimodule st;
        if (n % 2) {
            if (!admissible(m, n) || Bimodule(a, m).dim() == 0) continue;
            st = canonical_J(a, m, n);
        } else {
            EvenPair p{m, m2};
            if (!admissible(p, n) || build_graded(a, p).dim() == 0) continue;
            st = canonical_J(a, p, n);
        }
        cmat v = random_lr_unitary(st, 100 + done);
        AntiUnitary j{v * st.J.U * v.transpose()};
        cmat w = normalize_real_structure(st, j);
        const double d = conjugation_defect(st, j, w);
        worst = std::max(worst, d);
        o.require(d <= 1e-8, a.describe() + " ko " + std::to_string(n) + " defect " + sci(d));
        ++done;
    }
    const double t = seconds_since(t0);
    o.require(done == 20, "only " + std::to_string(done) + " instances drawn");
    o.require(t < 60.0, "runtime " + std::to_string(t) + " s");
    o.note(std::to_string(done) + " instances, worst defect " + sci(worst) + ", " + std::to_string(t) + " s");
    return o;
}

// ---------- 6 ----------

Outcome gauge() {
    Outcome o;
    auto t0 = Clock::now();
    SMFixture fx = build_sm(1);
    const StructuredBimodule& s = fx.h_lr;
    o.require(is_orientable(fx.lr, fx.mu).orientable, "A_LR fixture orientable");
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        cmat d = assemble_dirac(random_components(s, seed), s);
        GaugeResult g = gauge_trivialize(d, s);
        const double rel = g.residual / std::max(1.0, op_norm(d));
        worst = std::max(worst, rel);
        o.require(rel <= 1e-9, "seed " + std::to_string(seed) + " residual " + sci(rel));
    }
    const double t = seconds_since(t0);
    o.require(t < 30.0, "runtime " + std::to_string(t) + " s");
    o.note("dim H = " + std::to_string(s.dim()) + ", worst relative ||D_A|| " + sci(worst) + ", " +
           std::to_string(t) + " s");
    return o;
}

// ---------- 7 ----------

struct TripletKey {
    char type;
    int alpha, beta;
    IntMatrix m;
    bool operator==(const TripletKey& o) const {
        return type == o.type && alpha == o.alpha && beta == o.beta && m == o.m;
    }
};

/// The two cases written out directly from the summand list.
std::vector<TripletKey> expected_triplets(const Algebra& a, int ko) {
    std::vector<TripletKey> out;
    const int s = a.spectrum_size();
    if (a.num_summands() == 1) {
        IntMatrix m = IntMatrix::Zero(s, s);
        const int p = a.linear_point(0);
        m(p, p) = ko_signs(ko).eps == 1 ? 1 : 2;
        out.push_back({'A', p, p, m});
    } else if (a.num_summands() == 2 && a.summands()[0].n() == a.summands()[1].n()) {
        const int p = a.linear_point(0), q = a.linear_point(1);
        IntMatrix m = IntMatrix::Zero(s, s);
        m(p, q) = m(q, p) = 1;
        out.push_back({'B', std::min(p, q), std::max(p, q), m});
    }
    return out;
}

Outcome classification() {
    Outcome o;
    auto t0 = Clock::now();
    std::vector<Summand> singles;
    for (Ring r : {Ring::R, Ring::C, Ring::H})
        for (int k = 1; k <= 4; ++k)
            if (Summand{r, k}.n() <= 4) singles.push_back({r, k});
    std::vector<Algebra> algebras;
    for (const auto& s : singles) algebras.push_back(Algebra({s}));
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i; j < singles.size(); ++j) algebras.push_back(Algebra({singles[i], singles[j]}));
    int triplets = 0, checked = 0;
    for (const auto& a : algebras)
        for (int ko : {1, 3, 5, 7}) {
            std::vector<TripletKey> got;
            for (const auto& t : classify_irreducible(a, ko)) {
                got.push_back({t.type == TripletType::A ? 'A' : 'B', t.alpha, t.beta, t.m});
                TripletChecks c = check_triplet(t);
                o.require(c.pass(), a.describe() + " ko " + std::to_string(ko) + " triplet checks");
                ++checked;
            }
            auto want = expected_triplets(a, ko);
            o.require(got == want, a.describe() + " ko " + std::to_string(ko) + ": " + std::to_string(got.size()) +
                                       " triplets, expected " + std::to_string(want.size()));
            triplets += int(got.size());
        }
    OffDiagonalProblem p{Ring::H, Ring::C, 2, 4, 2, 0};
    ATReport at = A_of_T(p, compatible_partial_isometry(p, 1));
    o.require(at.dim == 24, "SM A(T) = " + std::to_string(at.dim));
    const double t = seconds_since(t0);
    o.note(std::to_string(algebras.size()) + " algebras x 4 KO-dimensions, " + std::to_string(triplets) +
           " triplets, " + std::to_string(checked) + " realized checks; SM dim A(T) = " + std::to_string(at.dim) +
           " (A_0 " + std::to_string(at.dim0) + "), " + std::to_string(t) + " s");
    return o;
}

// ---------- 8 ----------

std::string rational(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Outcome rmax() {
    Outcome o;
    auto t0 = Clock::now();
    struct Agreement {
        Ring k1, k2;
        int r1, r2;
        std::set<int> want;
    };
    for (const auto& g : {Agreement{Ring::C, Ring::C, 2, 2, {2}}, Agreement{Ring::R, Ring::R, 2, 2, {2}},
                          Agreement{Ring::H, Ring::H, 4, 4, {4}}}) {
        RMaxResult r = r_max({g.k1, g.k2, g.r1, g.r2});
        o.require(r.r_max == g.want && r.comparison.agrees,
                  std::string(1, ring_char(g.k1)) + ring_char(g.k2) + " R_max " + show(r.r_max));
    }
    // argmax property over a grid
    int grid = 0;
    for (Ring k1 : {Ring::R, Ring::C, Ring::H})
        for (Ring k2 : {Ring::R, Ring::C, Ring::H})
            for (int r1 = 1; r1 <= 8; ++r1)
                for (int r2 = 1; r2 <= 8; ++r2) {
                    if ((k1 == Ring::H && r1 % 2) || (k2 == Ring::H && r2 % 2)) continue;
                    RMaxResult r = r_max({k1, k2, r1, r2});
                    Rational best = r.values.empty() ? Rational(0) : r.values.front().second;
                    for (const auto& [rank, v] : r.values) best = std::max(best, v);
                    std::set<int> arg;
                    for (const auto& [rank, v] : r.values)
                        if (v == best) arg.insert(rank);
                    o.require(arg == r.r_max, "argmax mismatch");
                    ++grid;
                }
    // comparison record for every listed table case
    struct Probe {
        Ring k1, k2;
        int r1, r2;
    };
    const std::vector<Probe> probes = {
        {Ring::C, Ring::C, 2, 2}, {Ring::C, Ring::C, 3, 3}, {Ring::C, Ring::R, 2, 2}, {Ring::C, Ring::H, 2, 2},
        {Ring::R, Ring::C, 2, 2}, {Ring::R, Ring::R, 2, 2}, {Ring::R, Ring::R, 3, 3}, {Ring::R, Ring::H, 2, 2},
        {Ring::R, Ring::H, 2, 4}, {Ring::H, Ring::C, 2, 2}, {Ring::H, Ring::R, 2, 2}, {Ring::H, Ring::R, 4, 2},
        {Ring::H, Ring::H, 4, 4}, {Ring::H, Ring::H, 2, 2}, {Ring::H, Ring::H, 2, 4}, {Ring::H, Ring::H, 6, 6},
        {Ring::C, Ring::H, 4, 2}, {Ring::H, Ring::C, 2, 4}};
    int disagreements = 0;
    for (const auto& p : probes) {
        RMaxResult r = r_max({p.k1, p.k2, p.r1, p.r2});
        std::string line = std::string("(") + ring_char(p.k1) + "," + ring_char(p.k2) + ") (" + std::to_string(p.r1) +
                           "," + std::to_string(p.r2) + ") table case " + std::to_string(r.comparison.table_case) +
                           ": computed " + show(r.r_max) + " table " + show(r.comparison.table) + " " +
                           (r.comparison.agrees ? "agree" : "DISAGREE") + "; d =";
        for (const auto& [rank, v] : r.values) line += " " + std::to_string(rank) + ":" + rational(v);
        for (int rank : r.uncovered) line += " " + std::to_string(rank) + ":uncovered";
        if (!r.comparison.agrees) ++disagreements;
        o.note(line);
    }
    const double t = seconds_since(t0);
    o.require(t < 10.0, "runtime " + std::to_string(t) + " s");
    o.note(std::to_string(grid) + " grid problems checked for argmax; " + std::to_string(disagreements) + " of " +
           std::to_string(probes.size()) + " table probes disagree (reported, not reconciled); " + std::to_string(t) +
           " s");
    return o;
}

// ---------- 9 ----------

Outcome constrained() {
    Outcome o;
    for (int n : {1, 2, 3}) {
        SMReport r = sm_report(n, n == 1);
        const long long want = 8LL * n * n + n * (n + 1);
        o.require(r.constrained_dim == want,
                  "N=" + std::to_string(n) + " dim " + std::to_string(r.constrained_dim) + " vs " + std::to_string(want));
        for (const auto& s : r.slots)
            o.require(s.constrained == s.expected_constrained, "N=" + std::to_string(n) + " slot " + s.label);
        if (n == 1) {
            o.require(r.oracle_constrained && *r.oracle_constrained == want, "N=1 oracle");
            if (r.oracle_constrained) o.note("N=1 oracle " + std::to_string(*r.oracle_constrained));
        }
        std::string slots;
        for (const auto& s : r.slots)
            if (s.constrained) slots += " " + s.label + ":" + std::to_string(s.constrained);
        o.note("N=" + std::to_string(n) + " dim " + std::to_string(r.constrained_dim) + " =" + slots);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"SM matrix reproduction", sm_matrices},
        {"degeneracy flags", degeneracy},
        {"oracle equivalence for dimensions", oracle_equivalence},
        {"projector laws", projector_laws},
        {"real-structure uniqueness", real_uniqueness},
        {"gauge trivialization", gauge},
        {"classification pipeline", classification},
        {"d(r) and R_max", rmax},
        {"constrained moduli pattern", constrained},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
