#include "spectre/brute.hpp"

#include <cstdlib>
#include <string>

namespace spectre {

Eigen::Index brute_cap() {
    if (const char* v = std::getenv("SPECTRE_MAX_BRUTE_DIM")) {
        try {
            return std::stoll(v);
        } catch (...) {
        }
    }
    return 40;
}

namespace {

void check_cap(Eigen::Index d) {
    if (d > brute_cap())
        throw InputError("space of dimension " + std::to_string(d) + " exceeds the brute-force cap " +
                         std::to_string(brute_cap()));
}

/// Joint isotypic components of the two actions, optionally split by a grading.
std::vector<cmat> components(const Algebra& a, Eigen::Index dim, const Action& left, const Action& right,
                             const std::optional<cmat>& gamma) {
    std::vector<cmat> out;
    if (dim == 0) return out;
    auto pl = isotypic_projections(a, left);
    auto pr = isotypic_projections(a, right);
    for (const auto& l : pl)
        for (const auto& r : pr) {
            cmat p = l * r;
            if (!gamma) {
                cmat q = projection_range(p);
                if (q.cols()) out.push_back(q);
                continue;
            }
            for (double sign : {1.0, -1.0}) {
                cmat q = projection_range(p * (eye(dim) + sign * *gamma) * 0.5);
                if (q.cols()) out.push_back(q);
            }
        }
    return out;
}

struct Restricted {
    std::vector<cmat> l, r;
    std::optional<cmat> g;
};

Restricted restrict_to(const cmat& q, const std::vector<cmat>& l, const std::vector<cmat>& r,
                       const std::optional<cmat>& g) {
    Restricted out;
    for (const auto& x : l) out.l.push_back(q.adjoint() * x * q);
    for (const auto& x : r) out.r.push_back(q.adjoint() * x * q);
    if (g) out.g = cmat(q.adjoint() * *g * q);
    return out;
}

using Constraint = std::function<cvec(const cvec&)>;

enum class Relation { Left, Right, OrderOne, GammaCommute, GammaAnti };

/// Complex basis (full matrices) of maps X : source -> target with X = Qt Y Qs*
/// satisfying the listed relations, summed over all component pairs.
std::vector<cmat> complex_solutions(const std::vector<cmat>& qs, const std::vector<cmat>& qt,
                                    const std::vector<cmat>& l_src, const std::vector<cmat>& r_src,
                                    const std::vector<cmat>& l_tgt, const std::vector<cmat>& r_tgt,
                                    const std::optional<cmat>& g_src, const std::optional<cmat>& g_tgt,
                                    const std::vector<Relation>& rel, const std::vector<cmat>& commute_src,
                                    const std::vector<cmat>& commute_tgt, Eigen::Index rows, Eigen::Index cols) {
    std::vector<cmat> out;
    for (const auto& s : qs) {
        Restricted rs = restrict_to(s, l_src, r_src, g_src);
        std::vector<cmat> cs;
        for (const auto& c : commute_src) cs.push_back(s.adjoint() * c * s);
        for (const auto& t : qt) {
            Restricted rt = restrict_to(t, l_tgt, r_tgt, g_tgt);
            std::vector<cmat> ct;
            for (const auto& c : commute_tgt) ct.push_back(t.adjoint() * c * t);
            const Eigen::Index ds = s.cols(), dt = t.cols();
            std::vector<Constraint> cons;
            auto as_map = [dt, ds](const cvec& v) { return unvec(v, dt, ds); };
            for (Relation r : rel) {
                switch (r) {
                    case Relation::Left:
                        for (std::size_t i = 0; i < rs.l.size(); ++i)
                            cons.push_back([&, i](const cvec& v) {
                                cmat y = as_map(v);
                                return vec(y * rs.l[i] - rt.l[i] * y);
                            });
                        break;
                    case Relation::Right:
                        for (std::size_t i = 0; i < rs.r.size(); ++i)
                            cons.push_back([&, i](const cvec& v) {
                                cmat y = as_map(v);
                                return vec(y * rs.r[i] - rt.r[i] * y);
                            });
                        break;
                    case Relation::OrderOne:
                        for (std::size_t i = 0; i < rs.l.size(); ++i)
                            for (std::size_t j = 0; j < rs.r.size(); ++j)
                                cons.push_back([&, i, j](const cvec& v) {
                                    cmat y = as_map(v);
                                    return vec(y * rs.l[i] * rs.r[j] - rt.l[i] * y * rs.r[j] -
                                               rt.r[j] * y * rs.l[i] + rt.r[j] * rt.l[i] * y);
                                });
                        break;
                    case Relation::GammaCommute:
                        cons.push_back([&](const cvec& v) {
                            cmat y = as_map(v);
                            return vec(y * *rs.g - *rt.g * y);
                        });
                        break;
                    case Relation::GammaAnti:
                        cons.push_back([&](const cvec& v) {
                            cmat y = as_map(v);
                            return vec(y * *rs.g + *rt.g * y);
                        });
                        break;
                }
            }
            for (std::size_t i = 0; i < cs.size(); ++i)
                cons.push_back([&, i](const cvec& v) {
                    cmat y = as_map(v);
                    return vec(y * cs[i] - ct[i] * y);
                });
            cmat ns = common_nullspace(dt * ds, cons);
            for (Eigen::Index c = 0; c < ns.cols(); ++c) {
                cmat x = t * unvec(ns.col(c), dt, ds) * s.adjoint();
                if (x.rows() != rows || x.cols() != cols) throw CheckError("component shape mismatch");
                out.push_back(x);
            }
        }
    }
    return out;
}

std::vector<cmat> realify(const std::vector<cmat>& complex_basis) {
    std::vector<cmat> out;
    out.reserve(2 * complex_basis.size());
    for (const auto& b : complex_basis) {
        out.push_back(b);
        out.push_back(I1 * b);
    }
    return out;
}

/// Stack a list of matrices into one tall matrix (all with the same column count).
cmat stack(const std::vector<cmat>& parts) {
    Eigen::Index rows = 0, cols = parts.empty() ? 0 : parts.front().cols();
    for (const auto& p : parts) rows += p.rows();
    cmat out(rows, cols);
    Eigen::Index r = 0;
    for (const auto& p : parts) {
        out.middleRows(r, p.rows()) = p;
        r += p.rows();
    }
    return out;
}

std::vector<cmat> generator_actions(const StructuredBimodule& s, bool left) {
    std::vector<cmat> out;
    for (const auto& g : algebra_generators(s.algebra())) out.push_back(left ? s.left(g) : s.right(g));
    return out;
}

}  // namespace

LinmapDims brute_linmap_dims(const Algebra& a, const IntMatrix& m1, const IntMatrix& m2) {
    Bimodule h1(a, m1), h2(a, m2);
    check_cap(h1.dim() + h2.dim());
    auto gens = algebra_generators(a);
    std::vector<cmat> l1, r1, l2, r2;
    for (const auto& g : gens) {
        l1.push_back(h1.left(g));
        r1.push_back(h1.right(g));
        l2.push_back(h2.left(g));
        r2.push_back(h2.right(g));
    }
    auto q1 = components(a, h1.dim(), [&](const Element& x) { return h1.left(x); },
                         [&](const Element& x) { return h1.right(x); }, std::nullopt);
    auto q2 = components(a, h2.dim(), [&](const Element& x) { return h2.left(x); },
                         [&](const Element& x) { return h2.right(x); }, std::nullopt);
    auto count = [&](std::vector<Relation> rel) {
        return static_cast<long long>(complex_solutions(q1, q2, l1, r1, l2, r2, std::nullopt, std::nullopt, rel,
                                                        {}, {}, h2.dim(), h1.dim())
                                          .size());
    };
    return {count({Relation::Left}), count({Relation::Right}), count({Relation::Left, Relation::Right})};
}

long long brute_dirac_dim(const StructuredBimodule& s, const std::vector<Element>& central,
                          const std::optional<cmat>& eps) {
    const Eigen::Index d = s.dim();
    check_cap(d);
    if (d == 0) return 0;
    const Algebra& a = s.algebra();
    auto l = generator_actions(s, true);
    auto r = generator_actions(s, false);
    std::optional<cmat> g;
    if (s.graded) g = s.gamma();
    auto q = components(a, d, [&](const Element& x) { return s.left(x); },
                        [&](const Element& x) { return s.right(x); }, g);
    std::vector<Relation> rel{Relation::OrderOne};
    if (g) rel.push_back(Relation::GammaAnti);
    std::vector<cmat> commute;
    for (const auto& c : central) {
        commute.push_back(s.left(c));
        commute.push_back(s.right(c));
    }
    if (eps) commute.push_back(*eps);
    auto complex_basis = complex_solutions(q, q, l, r, l, r, g, g, rel, commute, commute, d, d);
    auto real_basis = realify(complex_basis);
    auto constraints = [&](const cmat& x) {
        std::vector<cmat> parts{x - x.adjoint()};
        if (s.ko) parts.push_back(x * s.J.U - double(s.ko->eps1) * s.J.U * x.conjugate());
        return stack(parts);
    };
    return real_nullity(real_basis, constraints);
}

long long brute_unitary_dim(const StructuredBimodule& s) {
    const Eigen::Index d = s.dim();
    check_cap(d);
    if (d == 0) return 0;
    const Algebra& a = s.algebra();
    auto l = generator_actions(s, true);
    auto r = generator_actions(s, false);
    std::optional<cmat> g;
    if (s.graded) g = s.gamma();
    auto q = components(a, d, [&](const Element& x) { return s.left(x); },
                        [&](const Element& x) { return s.right(x); }, g);
    std::vector<Relation> rel{Relation::Left, Relation::Right};
    if (g) rel.push_back(Relation::GammaCommute);
    auto real_basis = realify(complex_solutions(q, q, l, r, l, r, g, g, rel, {}, {}, d, d));
    auto constraints = [&](const cmat& x) {
        std::vector<cmat> parts{x + x.adjoint()};
        if (s.ko) parts.push_back(x * s.J.U - s.J.U * x.conjugate());
        return stack(parts);
    };
    return real_nullity(real_basis, constraints);
}

long long brute_commutant_selfadjoint_dim(const StructuredBimodule& s) {
    const Eigen::Index d = s.dim();
    check_cap(d);
    if (d == 0) return 0;
    const Algebra& a = s.algebra();
    auto l = generator_actions(s, true);
    auto r = generator_actions(s, false);
    std::optional<cmat> g;
    if (s.graded) g = s.gamma();
    auto q = components(a, d, [&](const Element& x) { return s.left(x); },
                        [&](const Element& x) { return s.right(x); }, g);
    std::vector<Relation> rel{Relation::Left, Relation::Right};
    if (g) rel.push_back(Relation::GammaCommute);
    auto real_basis = realify(complex_solutions(q, q, l, r, l, r, g, g, rel, {}, {}, d, d));
    auto constraints = [&](const cmat& x) {
        std::vector<cmat> parts{x - x.adjoint()};
        if (s.ko) parts.push_back(x * s.J.U - s.J.U * x.conjugate());
        return stack(parts);
    };
    return real_nullity(real_basis, constraints);
}

long long brute_kernel_dim(const StructuredBimodule& s) {
    if (!s.ko) throw InputError("kernel needs a real structure");
    const Eigen::Index d = s.dim();
    check_cap(d);
    const Algebra& a = s.algebra();
    const int n = s.ko->n;
    const bool odd = n % 2 == 1;
    const Bimodule& src = s.h.even;
    const Bimodule& tgt = odd ? s.h.even : s.h.odd;
    if (src.dim() == 0 || tgt.dim() == 0) return 0;
    std::vector<cmat> ls, rs, lt, rt;
    for (const auto& x : algebra_generators(a)) {
        ls.push_back(src.left(x));
        rs.push_back(src.right(x));
        lt.push_back(tgt.left(x));
        rt.push_back(tgt.right(x));
    }
    auto qs = components(a, src.dim(), [&](const Element& x) { return src.left(x); },
                         [&](const Element& x) { return src.right(x); }, std::nullopt);
    auto qt = components(a, tgt.dim(), [&](const Element& x) { return tgt.left(x); },
                         [&](const Element& x) { return tgt.right(x); }, std::nullopt);
    auto real_basis = realify(complex_solutions(qs, qt, ls, rs, lt, rt, std::nullopt, std::nullopt,
                                                {Relation::Right}, {}, {}, tgt.dim(), src.dim()));
    const cmat& u = s.J.U;
    const Eigen::Index de = src.dim();
    auto constraints = [&](const cmat& m) {
        if (odd) {
            cmat r = m + double(s.ko->eps1) * u * m.conjugate() * u.adjoint();
            return stack({m - m.adjoint(), r});
        }
        // D0 = [[0, M*], [M, 0]] on H; the relation is D0 + eps' J D0 J^-1 on the odd <- even block
        cmat full = cmat::Zero(d, d);
        full.bottomLeftCorner(d - de, de) = m;
        full.topRightCorner(de, d - de) = m.adjoint();
        cmat r = (full + double(s.ko->eps1) * u * full.conjugate() * u.adjoint()).bottomLeftCorner(d - de, de);
        return r;
    };
    return real_nullity(real_basis, constraints);
}

}  // namespace spectre
