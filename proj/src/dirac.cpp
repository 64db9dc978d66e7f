#include "spectre/dirac.hpp"

#include "spectre/brute.hpp"

#include <random>

namespace spectre {

Layout layout_of(const Bimodule& h) { return h.blocks(); }

Layout layout_of(const StructuredBimodule& s) {
    Layout out = s.h.even.blocks();
    for (Block b : s.h.odd.blocks()) {
        b.offset += s.h.even.dim();
        out.push_back(b);
    }
    return out;
}

double order_one_defect(const cmat& d, const StructuredBimodule& s) {
    if (d.rows() != s.dim() || d.cols() != s.dim()) throw InputError("operator has the wrong size");
    auto basis = algebra_basis(s.algebra());
    std::vector<cmat> l, r;
    for (const auto& x : basis) {
        l.push_back(s.left(x));
        r.push_back(s.right(x));
    }
    double defect = 0;
    for (const auto& la : l) {
        cmat c = d * la - la * d;
        for (const auto& rb : r) defect = std::max(defect, op_norm(c * rb - rb * c));
    }
    return defect;
}

cmat project_left(const cmat& t, const Layout& src, const Layout& dst) {
    cmat out = cmat::Zero(t.rows(), t.cols());
    for (const auto& s : src)
        for (const auto& d : dst) {
            if (s.alpha != d.alpha) continue;
            const int n = s.na;
            const Eigen::Index rs = s.size() / n, rd = d.size() / n;
            auto tb = t.block(d.offset, s.offset, d.size(), s.size());
            cmat tr = cmat::Zero(rd, rs);
            for (int i = 0; i < n; ++i) tr += tb.block(i * rd, i * rs, rd, rs);
            out.block(d.offset, s.offset, d.size(), s.size()) = kron(eye(n), tr) / double(n);
        }
    return out;
}

cmat project_right(const cmat& t, const Layout& src, const Layout& dst) {
    cmat out = cmat::Zero(t.rows(), t.cols());
    for (const auto& s : src)
        for (const auto& d : dst) {
            if (s.beta != d.beta) continue;
            const int n = s.nb;
            const Eigen::Index rs = s.size() / n, rd = d.size() / n;
            auto tb = t.block(d.offset, s.offset, d.size(), s.size());
            cmat tr = cmat::Zero(rd, rs);
            for (Eigen::Index y = 0; y < rd; ++y)
                for (Eigen::Index x = 0; x < rs; ++x)
                    for (int l = 0; l < n; ++l) tr(y, x) += tb(y * n + l, x * n + l);
            out.block(d.offset, s.offset, d.size(), s.size()) = kron(tr, eye(n)) / double(n);
        }
    return out;
}

DiracKind kind_of(const StructuredBimodule& s) {
    if (!s.ko) return s.graded ? DiracKind::Even : DiracKind::Odd;
    switch (s.ko->n) {
        case 0:
        case 4: return DiracKind::RealEven04;
        case 2:
        case 6: return DiracKind::RealEven26;
        default: return DiracKind::RealOdd;
    }
}

std::string kind_name(DiracKind k) {
    switch (k) {
        case DiracKind::Odd: return "odd";
        case DiracKind::Even: return "even";
        case DiracKind::RealOdd: return "real-odd";
        case DiracKind::RealEven04: return "real-even-0/4";
        case DiracKind::RealEven26: return "real-even-2/6";
    }
    return "?";
}

ComponentShapes component_shapes(const StructuredBimodule& s) {
    ComponentShapes out;
    const Algebra& a = s.algebra();
    const int sz = a.spectrum_size();
    const DiracKind kind = kind_of(s);
    const bool graded = s.graded;
    const IntMatrix& me = s.h.even.multiplicities();
    const IntMatrix& mo = graded ? s.h.odd.multiplicities() : me;
    const bool with_n = kind == DiracKind::Odd || kind == DiracKind::Even;
    for (int alpha = 0; alpha < sz; ++alpha)
        for (int beta = 0; beta < sz; ++beta) {
            if (me(alpha, beta) == 0) continue;
            const int src_rows = a.n(alpha) * int(me(alpha, beta));
            for (int gamma = 0; gamma < sz; ++gamma) {
                if (mo(gamma, beta) == 0) continue;
                if (!graded && gamma < alpha) continue;
                std::array<int, 3> key{alpha, beta, gamma};
                out.M[key] = {a.n(gamma) * int(mo(gamma, beta)), src_rows};
                if (gamma == alpha) {
                    if (!graded) out.self_adjoint_M.push_back(key);
                    if (with_n) out.traceless_M.push_back(key);
                }
            }
            if (!with_n) continue;
            for (int delta = 0; delta < sz; ++delta) {
                if (mo(alpha, delta) == 0) continue;
                if (!graded && delta < beta) continue;
                std::array<int, 3> key{alpha, beta, delta};
                out.N[key] = {int(mo(alpha, delta)) * a.n(delta), int(me(alpha, beta)) * a.n(beta)};
                if (!graded && delta == beta) out.self_adjoint_N.push_back(key);
            }
        }
    return out;
}

namespace {

cmat first_leg_trace(const cmat& m, int n) {
    const Eigen::Index r = m.rows() / n, c = m.cols() / n;
    cmat tr = cmat::Zero(r, c);
    for (int i = 0; i < n; ++i) tr += m.block(i * r, i * c, r, c);
    return tr;
}

cmat remove_first_leg_trace(const cmat& m, int n) { return m - kron(eye(n), first_leg_trace(m, n)) / double(n); }

bool contains(const std::vector<std::array<int, 3>>& v, const std::array<int, 3>& k) {
    return std::find(v.begin(), v.end(), k) != v.end();
}

std::string key_string(const char* what, const std::array<int, 3>& k) {
    return std::string(what) + "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
           ")";
}

const Block& find_block(const Bimodule& h, int alpha, int beta) {
    int i = h.block_index(alpha, beta);
    if (i < 0) throw InputError("missing block");
    return h.blocks()[i];
}

/// Right-linear (M) and left-linear (N) pieces between two bimodules.
cmat assemble_between(const DiracComponents& c, const Bimodule& src, const Bimodule& dst, bool with_adjoint,
                      bool m_only) {
    cmat out = cmat::Zero(dst.dim(), src.dim());
    for (const auto& [key, m] : c.M) {
        const auto [alpha, beta, gamma] = key;
        const Block& s = find_block(src, alpha, beta);
        const Block& d = find_block(dst, gamma, beta);
        cmat piece = kron(m, eye(s.nb));
        out.block(d.offset, s.offset, d.size(), s.size()) += piece;
        if (with_adjoint && gamma != alpha) out.block(s.offset, d.offset, s.size(), d.size()) += piece.adjoint();
    }
    if (m_only) return out;
    for (const auto& [key, nmat] : c.N) {
        const auto [alpha, beta, delta] = key;
        const Block& s = find_block(src, alpha, beta);
        const Block& d = find_block(dst, alpha, delta);
        cmat piece = kron(eye(s.na), nmat);
        out.block(d.offset, s.offset, d.size(), s.size()) += piece;
        if (with_adjoint && delta != beta) out.block(s.offset, d.offset, s.size(), d.size()) += piece.adjoint();
    }
    return out;
}

cmat from_delta(const cmat& delta) {
    const auto de = delta.cols(), dodd = delta.rows();
    cmat d = cmat::Zero(de + dodd, de + dodd);
    d.topRightCorner(de, dodd) = delta.adjoint();
    d.bottomLeftCorner(dodd, de) = delta;
    return d;
}

}  // namespace

DiracComponents random_components(const StructuredBimodule& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    ComponentShapes shapes = component_shapes(s);
    auto draw = [&](std::pair<int, int> shape) {
        cmat x(shape.first, shape.second);
        for (int j = 0; j < shape.second; ++j)
            for (int i = 0; i < shape.first; ++i) {
                double re = g(rng);
                double im = g(rng);
                x(i, j) = cplx(re, im);
            }
        return x;
    };
    DiracComponents c;
    const Algebra& a = s.algebra();
    for (const auto& [key, shape] : shapes.M) {
        cmat x = draw(shape);
        if (contains(shapes.self_adjoint_M, key)) x = (0.5 * (x + x.adjoint())).eval();
        if (contains(shapes.traceless_M, key)) x = remove_first_leg_trace(x, a.n(key[0]));
        c.M[key] = x;
    }
    for (const auto& [key, shape] : shapes.N) {
        cmat x = draw(shape);
        if (contains(shapes.self_adjoint_N, key)) x = (0.5 * (x + x.adjoint())).eval();
        c.N[key] = x;
    }
    return c;
}

cmat assemble_dirac(const DiracComponents& c, const StructuredBimodule& s) {
    ComponentShapes shapes = component_shapes(s);
    const Algebra& a = s.algebra();
    auto check = [&](const char* what, const auto& given, const auto& expected, const auto& sa) {
        for (const auto& [key, m] : given) {
            auto it = expected.find(key);
            if (it == expected.end()) throw InputError(key_string(what, key) + " is not a free component");
            if (m.rows() != it->second.first || m.cols() != it->second.second)
                throw InputError(key_string(what, key) + " has shape " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + ", expected " + std::to_string(it->second.first) + "x" +
                                 std::to_string(it->second.second));
            if (contains(sa, key) && (m - m.adjoint()).norm() > 1e-9 * std::max(1.0, m.norm()))
                throw InputError(key_string(what, key) + " must be self-adjoint");
        }
    };
    check("M", c.M, shapes.M, shapes.self_adjoint_M);
    check("N", c.N, shapes.N, shapes.self_adjoint_N);
    for (const auto& key : shapes.traceless_M) {
        auto it = c.M.find(key);
        if (it == c.M.end()) continue;
        if (first_leg_trace(it->second, a.n(key[0])).norm() > 1e-9 * std::max(1.0, it->second.norm()))
            throw InputError(key_string("M", key) + " must have a traceless first leg");
    }
    switch (kind_of(s)) {
        case DiracKind::Odd: return assemble_between(c, s.h.even, s.h.even, true, false);
        case DiracKind::Even: return from_delta(assemble_between(c, s.h.even, s.h.odd, false, false));
        case DiracKind::RealOdd: return apply_Rn(assemble_between(c, s.h.even, s.h.even, true, true), s);
        default: return apply_Rn(assemble_between(c, s.h.even, s.h.odd, false, true), s);
    }
}

cmat Rn_map(const cmat& m, const StructuredBimodule& s) {
    if (!s.ko) throw InputError("R_n needs a real structure");
    const auto de = s.h.even.dim(), dodd = s.h.odd.dim();
    const cmat& u = s.J.U;
    switch (kind_of(s)) {
        case DiracKind::RealOdd:
            if (m.rows() != de || m.cols() != de) throw InputError("M has the wrong size");
            return m + double(s.ko->eps1) * u * m.conjugate() * u.adjoint();
        case DiracKind::RealEven04: {
            if (m.rows() != dodd || m.cols() != de) throw InputError("M has the wrong size");
            cmat ue = u.topLeftCorner(de, de), uo = u.bottomRightCorner(dodd, dodd);
            return m + uo * m.conjugate() * ue.adjoint();
        }
        case DiracKind::RealEven26: {
            if (m.rows() != dodd || m.cols() != de) throw InputError("M has the wrong size");
            cmat jt = u.bottomLeftCorner(dodd, de);
            return m + double(s.ko->eps) * jt * m.transpose() * jt.conjugate();
        }
        default: throw InputError("R_n needs a real structure");
    }
}

cmat apply_Rn(const cmat& m, const StructuredBimodule& s) {
    const bool odd = kind_of(s) == DiracKind::RealOdd;
    Layout src = layout_of(s.h.even);
    Layout dst = odd ? src : layout_of(s.h.odd);
    cmat r = Rn_map(m, s);
    if ((project_right(m, src, dst) - m).norm() > 1e-9 * std::max(1.0, m.norm()))
        throw InputError("M is not right-linear");
    if (odd) {
        if ((m - m.adjoint()).norm() > 1e-9 * std::max(1.0, m.norm())) throw InputError("M is not self-adjoint");
        return r;
    }
    return from_delta(r);
}

RelationDefects dirac_defects(const cmat& d, const StructuredBimodule& s) {
    RelationDefects out;
    out.self_adjoint = op_norm(d - d.adjoint());
    out.order_one = order_one_defect(d, s);
    if (s.graded) {
        cmat g = s.gamma();
        out.grading = op_norm(d * g + g * d);
    }
    if (s.ko) out.real = op_norm(d * s.J.U - double(s.ko->eps1) * s.J.U * d.conjugate());
    return out;
}

namespace {

/// Real basis of self-adjoint m x m matrices, or of all m x n matrices.
std::vector<cmat> sa_basis(int m) {
    std::vector<cmat> out;
    for (int p = 0; p < m; ++p)
        for (int q = p; q < m; ++q) {
            cmat e = cmat::Zero(m, m);
            if (p == q) {
                e(p, p) = 1.0;
                out.push_back(e);
                continue;
            }
            e(p, q) = 1.0;
            e(q, p) = 1.0;
            out.push_back(e);
            cmat f = cmat::Zero(m, m);
            f(p, q) = I1;
            f(q, p) = -I1;
            out.push_back(f);
        }
    return out;
}

std::vector<cmat> full_basis(int rows, int cols) {
    std::vector<cmat> out;
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < cols; ++q) {
            cmat e = cmat::Zero(rows, cols);
            e(p, q) = 1.0;
            out.push_back(e);
            e(p, q) = I1;
            out.push_back(e);
        }
    return out;
}

}  // namespace

KernelBasis kernel_basis_Rn(const StructuredBimodule& s) {
    if (!s.ko) throw InputError("R_n needs a real structure");
    KernelBasis out;
    out.real_dim = kernel_dim(s);
    const DiracKind kind = kind_of(s);
    std::vector<cmat> candidates;
    if (kind == DiracKind::RealOdd) {
        const Bimodule& h = s.h.even;
        for (const auto& b : h.blocks())
            for (const auto& k : sa_basis(b.mult)) {
                cmat x = cmat::Zero(h.dim(), h.dim());
                x.block(b.offset, b.offset, b.size(), b.size()) = kron(eye(b.na), kron(k, eye(b.nb)));
                candidates.push_back(x);
            }
    } else {
        const Bimodule& he = s.h.even;
        const Bimodule& ho = s.h.odd;
        for (const auto& be : he.blocks()) {
            int oi = ho.block_index(be.alpha, be.beta);
            if (oi < 0) continue;
            const Block& bo = ho.blocks()[oi];
            for (const auto& k : full_basis(bo.mult, be.mult)) {
                cmat x = cmat::Zero(ho.dim(), he.dim());
                x.block(bo.offset, be.offset, bo.size(), be.size()) = kron(eye(be.na), kron(k, eye(be.nb)));
                candidates.push_back(x);
            }
        }
    }
    // R_n = 1 + sigma with sigma an involution; (1 - sigma)/2 projects onto the kernel
    std::vector<cmat> projected;
    for (const auto& k : candidates) projected.push_back(0.5 * (2.0 * k - Rn_map(k, s)));
    out.basis = real_span_basis(projected);
    return out;
}

long long dirac_dim(const Algebra& a, const IntMatrix& m) {
    check_multiplicity(a, m);
    const int sz = a.spectrum_size();
    long long d = 0;
    for (int alpha = 0; alpha < sz; ++alpha)
        for (int beta = 0; beta < sz; ++beta) {
            const long long mab = m(alpha, beta);
            if (mab == 0) continue;
            const long long na = a.n(alpha), nb = a.n(beta);
            for (int gamma = alpha + 1; gamma < sz; ++gamma) d += 2 * a.n(gamma) * m(gamma, beta) * na * mab;
            d += mab * mab * (na * na - 1);
            for (int delta = beta + 1; delta < sz; ++delta) d += 2 * m(alpha, delta) * a.n(delta) * mab * nb;
            d += (mab * nb) * (mab * nb);
        }
    return d;
}

long long dirac_dim(const Algebra& a, const EvenPair& p) {
    check_multiplicity(a, p.even);
    check_multiplicity(a, p.odd);
    const int sz = a.spectrum_size();
    long long d = 0;
    for (int alpha = 0; alpha < sz; ++alpha)
        for (int beta = 0; beta < sz; ++beta) {
            const long long me = p.even(alpha, beta);
            if (me == 0) continue;
            const long long na = a.n(alpha), nb = a.n(beta);
            for (int gamma = 0; gamma < sz; ++gamma)
                if (gamma != alpha) d += 2 * a.n(gamma) * p.odd(gamma, beta) * na * me;
            d += 2 * (na * na - 1) * p.odd(alpha, beta) * me;
            for (int delta = 0; delta < sz; ++delta) d += 2 * p.odd(alpha, delta) * a.n(delta) * me * nb;
        }
    return d;
}

long long kernel_dim(const IntMatrix& m, int n) {
    if (!admissible(m, n)) throw InputError("multiplicity matrix is not admissible");
    long long d = 0;
    for (Eigen::Index alpha = 0; alpha < m.rows(); ++alpha) {
        const long long k = m(alpha, alpha);
        d += (n == 1 || n == 3) ? k * (k + 1) / 2 : k * (k - 1) / 2;
        for (Eigen::Index beta = alpha + 1; beta < m.cols(); ++beta) d += m(alpha, beta) * m(alpha, beta);
    }
    return d;
}

long long kernel_dim(const EvenPair& p, int n) {
    if (!admissible(p, n)) throw InputError("pair is not admissible");
    long long d = 0;
    const IntMatrix& me = p.even;
    const IntMatrix& mo = p.odd;
    for (Eigen::Index alpha = 0; alpha < me.rows(); ++alpha) {
        if (n == 0 || n == 4) {
            d += mo(alpha, alpha) * me(alpha, alpha);
            for (Eigen::Index beta = alpha + 1; beta < me.cols(); ++beta) d += 2 * mo(alpha, beta) * me(alpha, beta);
        } else {
            const long long k = me(alpha, alpha);
            d += n == 2 ? k * (k + 1) : k * (k - 1);
            for (Eigen::Index beta = alpha + 1; beta < me.cols(); ++beta) d += 2 * me(beta, alpha) * me(alpha, beta);
        }
    }
    return d;
}

long long dirac_dim(const Algebra& a, const IntMatrix& m, int n) {
    const int sz = a.spectrum_size();
    long long d = 0;
    for (int alpha = 0; alpha < sz; ++alpha)
        for (int beta = 0; beta < sz; ++beta) {
            const long long mab = m(alpha, beta);
            if (mab == 0) continue;
            const long long na = a.n(alpha);
            for (int gamma = alpha + 1; gamma < sz; ++gamma) d += 2 * a.n(gamma) * m(gamma, beta) * na * mab;
            d += (na * mab) * (na * mab);
        }
    return d - kernel_dim(m, n);
}

long long dirac_dim(const Algebra& a, const EvenPair& p, int n) {
    const int sz = a.spectrum_size();
    long long d = 0;
    for (int alpha = 0; alpha < sz; ++alpha)
        for (int beta = 0; beta < sz; ++beta)
            for (int gamma = 0; gamma < sz; ++gamma)
                d += 2 * a.n(gamma) * p.odd(gamma, beta) * a.n(alpha) * p.even(alpha, beta);
    return d - kernel_dim(p, n);
}

long long dirac_dim(const StructuredBimodule& s) {
    const Algebra& a = s.algebra();
    EvenPair p{s.h.even.multiplicities(), s.h.odd.multiplicities()};
    switch (kind_of(s)) {
        case DiracKind::Odd: return dirac_dim(a, p.even);
        case DiracKind::Even: return dirac_dim(a, p);
        case DiracKind::RealOdd: return dirac_dim(a, p.even, s.ko->n);
        default: return dirac_dim(a, p, s.ko->n);
    }
}

long long kernel_dim(const StructuredBimodule& s) {
    if (!s.ko) throw InputError("R_n needs a real structure");
    EvenPair p{s.h.even.multiplicities(), s.h.odd.multiplicities()};
    if (kind_of(s) == DiracKind::RealOdd) return kernel_dim(p.even, s.ko->n);
    return kernel_dim(p, s.ko->n);
}

long long unitary_group_dim(const StructuredBimodule& s) {
    EvenPair p{s.h.even.multiplicities(), s.h.odd.multiplicities()};
    switch (kind_of(s)) {
        case DiracKind::Odd: return unitary_group_dim(p.even);
        case DiracKind::Even: return unitary_group_dim(p);
        case DiracKind::RealOdd: return unitary_group_dim(p.even, s.ko->n);
        default: return unitary_group_dim(p, s.ko->n);
    }
}

std::vector<cmat> dirac_spanning_set(const StructuredBimodule& s) {
    ComponentShapes shapes = component_shapes(s);
    const Algebra& a = s.algebra();
    std::vector<cmat> out;
    auto directions = [](std::pair<int, int> shape, bool sa) {
        return sa ? sa_basis(shape.first) : full_basis(shape.first, shape.second);
    };
    for (const auto& [key, shape] : shapes.M)
        for (cmat x : directions(shape, contains(shapes.self_adjoint_M, key))) {
            if (contains(shapes.traceless_M, key)) x = remove_first_leg_trace(x, a.n(key[0]));
            DiracComponents c;
            c.M[key] = x;
            out.push_back(assemble_dirac(c, s));
        }
    for (const auto& [key, shape] : shapes.N)
        for (const cmat& x : directions(shape, contains(shapes.self_adjoint_N, key))) {
            DiracComponents c;
            c.N[key] = x;
            out.push_back(assemble_dirac(c, s));
        }
    return out;
}

long long constrained_dirac_dim(const StructuredBimodule& s, const std::vector<Element>& gens) {
    const Algebra& a = s.algebra();
    for (const auto& g : gens) check_element(a, g);
    // closure of the real span under products and adjoints
    std::vector<cmat> span;
    auto flat = [&](const Element& x) {
        cmat v(1, 0);
        for (const auto& b : x.blocks) {
            cmat w(1, v.cols() + b.size());
            w << v, Eigen::Map<const cmat>(b.data(), 1, b.size());
            v = w;
        }
        return v;
    };
    for (const auto& g : gens) span.push_back(flat(g));
    const auto r0 = real_rank(span);
    for (const auto& g : gens) {
        auto extended = span;
        extended.push_back(flat(adjoint(g)));
        for (const auto& h : gens) extended.push_back(flat(mul(g, h)));
        if (real_rank(extended) != r0) throw InputError("constraint generators do not span a *-subalgebra");
    }
    std::vector<cmat> basis = real_span_basis(dirac_spanning_set(s));
    std::vector<cmat> lc, rc;
    for (const auto& g : gens) {
        lc.push_back(s.left(g));
        rc.push_back(s.right(g));
    }
    std::vector<cmat> images;
    for (const auto& d : basis) {
        cmat stacked(d.rows() * 2 * gens.size(), d.cols());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            stacked.block(2 * i * d.rows(), 0, d.rows(), d.cols()) = d * lc[i] - lc[i] * d;
            stacked.block((2 * i + 1) * d.rows(), 0, d.rows(), d.cols()) = d * rc[i] - rc[i] * d;
        }
        images.push_back(stacked);
    }
    return static_cast<long long>(basis.size()) - real_rank(images);
}

std::vector<cmat> unitary_lie_basis(const StructuredBimodule& s) {
    std::vector<cmat> candidates;
    const auto d = s.dim();
    auto add_part = [&](const Bimodule& h, Eigen::Index shift) {
        for (const auto& b : h.blocks())
            for (const auto& k : full_basis(b.mult, b.mult)) {
                cmat x = cmat::Zero(d, d);
                x.block(shift + b.offset, shift + b.offset, b.size(), b.size()) =
                    kron(eye(b.na), kron(k, eye(b.nb)));
                candidates.push_back(x);
            }
    };
    add_part(s.h.even, 0);
    add_part(s.h.odd, s.h.even.dim());
    if (candidates.empty()) return {};
    // anti-self-adjoint, commuting with J
    std::vector<cmat> images;
    for (const auto& x : candidates) {
        cmat c(2 * d, d);
        c.topRows(d) = x + x.adjoint();
        c.bottomRows(d) = s.ko ? cmat(x * s.J.U - s.J.U * x.conjugate()) : cmat::Zero(d, d);
        images.push_back(c);
    }
    rmat r(images.front().size() * 2, images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (Eigen::Index i = 0; i < images[j].size(); ++i) {
            r(2 * i, j) = images[j].data()[i].real();
            r(2 * i + 1, j) = images[j].data()[i].imag();
        }
    rmat ns = nullspace(r);
    std::vector<cmat> out;
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
        cmat x = cmat::Zero(d, d);
        for (std::size_t j = 0; j < candidates.size(); ++j) x += ns(j, c) * candidates[j];
        out.push_back(x);
    }
    return out;
}

long long moduli_dim_estimate(const StructuredBimodule& s, std::uint64_t seed) {
    cmat d = assemble_dirac(random_components(s, seed), s);
    std::vector<cmat> orbit;
    for (const auto& x : unitary_lie_basis(s)) orbit.push_back(x * d - d * x);
    return dirac_dim(s) - real_rank(orbit);
}

DiracSpaceReport dirac_space_dim(const StructuredBimodule& s, bool with_oracle, std::optional<std::uint64_t> seed) {
    DiracSpaceReport r;
    r.dim_D0 = dirac_dim(s);
    r.dim_U = unitary_group_dim(s);
    if (s.ko) r.dim_kernel = kernel_dim(s);
    if (seed) r.moduli_estimate = moduli_dim_estimate(s, *seed);
    if (with_oracle && s.dim() <= brute_cap()) {
        r.oracle_D0 = brute_dirac_dim(s, {});
        r.oracle_U = brute_unitary_dim(s);
        if (s.ko) r.oracle_kernel = brute_kernel_dim(s);
    }
    return r;
}

GaugeResult gauge_trivialize(const cmat& d, const StructuredBimodule& s) {
    if (!s.graded || !s.ko) throw InputError("gauge trivialization needs a real even bimodule");
    const Algebra& a = s.algebra();
    EvenPair p{s.h.even.multiplicities(), s.h.odd.multiplicities()};
    if (!is_quasi_orientable(p) || !is_orientable(a, signed_from_pair(p)).orientable)
        throw InputError("bimodule is not orientable");
    GaugeResult out;
    out.vacuous = a.num_summands() <= 1;
    out.A = cmat::Zero(d.rows(), d.cols());
    for (int i = 0; i < a.num_summands(); ++i)
        for (int j = 0; j < a.num_summands(); ++j) {
            if (i == j) continue;
            cmat li = s.left(summand_unit(a, i));
            cmat lj = s.left(summand_unit(a, j));
            out.A -= li * (d * lj - lj * d);
        }
    cmat da = d + out.A + s.J.conjugate_op(out.A);
    out.residual = op_norm(da);
    return out;
}

}  // namespace spectre
