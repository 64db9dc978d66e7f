#include "spectre/real_structure.hpp"

#include <random>

namespace spectre {

KOData ko_signs(int n) {
    if (n < 0 || n > 7) throw InputError("KO-dimension must be in 0..7");
    static const int eps[8] = {1, 1, -1, -1, -1, -1, 1, 1};
    static const int eps1[8] = {1, -1, 1, 1, 1, -1, 1, 1};
    static const int eps2[8] = {1, 0, -1, 0, 1, 0, -1, 0};
    return {n, eps[n], eps1[n], eps2[n]};
}

cmat StructuredBimodule::gamma() const {
    if (!graded) throw InputError("bimodule is not graded");
    return h.gamma();
}

StructuredBimodule plain_odd(const Algebra& a, const IntMatrix& m) {
    StructuredBimodule s;
    s.h = {Bimodule(a, m), Bimodule(a, IntMatrix::Zero(m.rows(), m.cols()))};
    return s;
}

StructuredBimodule plain_even(const Algebra& a, const EvenPair& p) {
    StructuredBimodule s;
    s.h = build_graded(a, p);
    s.graded = true;
    return s;
}

namespace {

bool symmetric(const IntMatrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

bool even_diagonal(const IntMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m(i, i) % 2 != 0) return false;
    return true;
}

/// Matrix of the flip block (alpha, beta) of src -> block (beta, alpha) of dst,
/// (i, j, l) -> (l, j', i) weighted by middle(alpha, beta)(j', j).
cmat flip_matrix(const Bimodule& src, const Bimodule& dst,
                 const std::function<cmat(int, int, int)>& middle) {
    cmat u = cmat::Zero(dst.dim(), src.dim());
    for (const auto& b : src.blocks()) {
        int t = dst.block_index(b.beta, b.alpha);
        if (t < 0) throw InputError("flip target block is missing");
        const Block& d = dst.blocks()[t];
        if (d.mult != b.mult) throw InputError("flip target block has a different multiplicity");
        cmat mid = middle(b.alpha, b.beta, b.mult);
        for (int i = 0; i < b.na; ++i)
            for (int j = 0; j < b.mult; ++j)
                for (int l = 0; l < b.nb; ++l) {
                    Eigen::Index from = b.offset + (Eigen::Index(i) * b.mult + j) * b.nb + l;
                    for (int jp = 0; jp < b.mult; ++jp) {
                        if (mid(jp, j) == 0.0) continue;
                        Eigen::Index to = d.offset + (Eigen::Index(l) * d.mult + jp) * d.nb + i;
                        u(to, from) = mid(jp, j);
                    }
                }
    }
    return u;
}

cmat odd_canonical_matrix(const Bimodule& h, int n) {
    const bool twisted = (n == 3 || n == 5);
    return flip_matrix(h, h, [&](int alpha, int beta, int m) -> cmat {
        if (!twisted) return eye(m);
        if (alpha < beta) return eye(m);
        if (alpha > beta) return -eye(m);
        return omega(m / 2);
    });
}

/// Middle-leg matrix of a left-right linear operator on one block.
cmat middle_block(const cmat& k, const Block& b) {
    cmat out(b.mult, b.mult);
    for (int j = 0; j < b.mult; ++j)
        for (int jp = 0; jp < b.mult; ++jp)
            out(jp, j) = k(b.offset + Eigen::Index(jp) * b.nb, b.offset + Eigen::Index(j) * b.nb);
    return out;
}

cmat lr_from_middles(const Bimodule& h, const std::vector<cmat>& middles) {
    cmat w = cmat::Zero(h.dim(), h.dim());
    for (std::size_t i = 0; i < h.blocks().size(); ++i) {
        const auto& b = h.blocks()[i];
        w.block(b.offset, b.offset, b.size(), b.size()) = kron(eye(b.na), kron(middles[i], eye(b.nb)));
    }
    return w;
}

/// W left-right linear with V = W X W^T, for odd structures on a single bimodule.
cmat normalize_odd(const Bimodule& h, const cmat& x, const cmat& v, int n) {
    cmat k = v * x.adjoint();
    const bool twisted = (n == 3 || n == 5);
    std::vector<cmat> w(h.blocks().size());
    for (std::size_t i = 0; i < h.blocks().size(); ++i) {
        const auto& b = h.blocks()[i];
        cmat kb = middle_block(k, b);
        if (b.alpha < b.beta) {
            w[i] = kb;
        } else if (b.alpha > b.beta) {
            w[i] = eye(b.mult);
        } else if (twisted) {
            w[i] = symplectic_unitary(kb * omega(b.mult / 2));
        } else {
            w[i] = takagi_unitary(kb);
        }
    }
    return lr_from_middles(h, w);
}

}  // namespace

bool admissible(const IntMatrix& m, int n) {
    if (n % 2 == 0) throw InputError("a single multiplicity matrix needs an odd KO-dimension");
    ko_signs(n);
    if (!symmetric(m)) return false;
    if (n == 3 || n == 5) return even_diagonal(m);
    return true;
}

bool admissible(const EvenPair& p, int n) {
    if (n % 2 != 0) throw InputError("an even pair needs an even KO-dimension");
    ko_signs(n);
    switch (n) {
        case 0: return symmetric(p.even) && symmetric(p.odd);
        case 4:
            return symmetric(p.even) && symmetric(p.odd) && even_diagonal(p.even) && even_diagonal(p.odd);
        default: return p.odd == IntMatrix(p.even.transpose());
    }
}

StructuredBimodule canonical_J(const Algebra& a, const IntMatrix& m, int n) {
    check_multiplicity(a, m);
    if (!admissible(m, n))
        throw InputError("multiplicity matrix is not admissible for KO-dimension " + std::to_string(n));
    StructuredBimodule s = plain_odd(a, m);
    s.ko = ko_signs(n);
    s.J = {odd_canonical_matrix(s.h.even, n)};
    return s;
}

StructuredBimodule canonical_J(const Algebra& a, const EvenPair& p, int n) {
    check_multiplicity(a, p.even);
    check_multiplicity(a, p.odd);
    if (!admissible(p, n))
        throw InputError("pair is not admissible for KO-dimension " + std::to_string(n));
    StructuredBimodule s = plain_even(a, p);
    s.ko = ko_signs(n);
    if (n == 0 || n == 4) {
        int odd_n = n == 0 ? 1 : 3;
        s.J = {block_diag(odd_canonical_matrix(s.h.even, odd_n), odd_canonical_matrix(s.h.odd, odd_n))};
    } else {
        cmat jt = flip_matrix(s.h.even, s.h.odd, [](int, int, int m) -> cmat { return eye(m); });
        const auto de = s.h.even.dim(), dodd = s.h.odd.dim();
        cmat u = cmat::Zero(de + dodd, de + dodd);
        u.topRightCorner(de, dodd) = double(s.ko->eps) * jt.transpose();
        u.bottomLeftCorner(dodd, de) = jt;
        s.J = {u};
    }
    return s;
}

double real_structure_defect(const StructuredBimodule& s, const AntiUnitary& J) {
    if (!s.ko) throw InputError("bimodule carries no KO-dimension");
    const auto d = s.dim();
    if (J.U.rows() != d || J.U.cols() != d) throw InputError("real structure has the wrong size");
    if (d == 0) return 0.0;
    double defect = (J.U * J.U.adjoint() - eye(d)).norm();
    defect = std::max(defect, (J.square() - double(s.ko->eps) * eye(d)).norm());
    for (const auto& x : algebra_basis(s.algebra()))
        defect = std::max(defect, (s.right(x) - J.conjugate_op(s.left(adjoint(x)))).norm());
    if (s.graded) {
        cmat g = s.gamma();
        // gamma J = eps'' J gamma  <=>  gamma U = eps'' U conj(gamma)
        defect = std::max(defect, (g * J.U - double(s.ko->eps2) * J.U * g.conjugate()).norm());
    }
    return defect;
}

cmat normalize_real_structure(const StructuredBimodule& s, const AntiUnitary& J_in) {
    double d = real_structure_defect(s, J_in);
    if (d > 1e-8) throw CheckError("input is not a valid real structure (defect " + std::to_string(d) + ")");
    const int n = s.ko->n;
    cmat w;
    if (n % 2 == 1) {
        w = normalize_odd(s.h.even, s.J.U, J_in.U, n);
    } else if (n == 0 || n == 4) {
        const auto de = s.h.even.dim(), dodd = s.h.odd.dim();
        int odd_n = n == 0 ? 1 : 3;
        cmat we = normalize_odd(s.h.even, s.J.U.topLeftCorner(de, de), J_in.U.topLeftCorner(de, de), odd_n);
        cmat wo = normalize_odd(s.h.odd, s.J.U.bottomRightCorner(dodd, dodd),
                                J_in.U.bottomRightCorner(dodd, dodd), odd_n);
        w = block_diag(we, wo);
    } else {
        const auto de = s.h.even.dim(), dodd = s.h.odd.dim();
        cmat jt_in = J_in.U.bottomLeftCorner(dodd, de);
        cmat jt_can = s.J.U.bottomLeftCorner(dodd, de);
        w = block_diag(eye(de), jt_in * jt_can.adjoint());
    }
    // J_in = W J W^{-1}, so W* normalizes
    return w.adjoint();
}

double conjugation_defect(const StructuredBimodule& s, const AntiUnitary& J_in, const cmat& U) {
    // (U J_in U*) has matrix U V conj(U*) = U V U^T
    return (U * J_in.U * U.transpose() - s.J.U).norm();
}

cmat random_lr_unitary(const StructuredBimodule& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    auto one = [&](const Bimodule& h) {
        std::vector<cmat> mids;
        for (const auto& b : h.blocks()) {
            cmat x(b.mult, b.mult);
            for (int i = 0; i < b.mult; ++i)
                for (int j = 0; j < b.mult; ++j) {
                    double re = g(rng);
                    double im = g(rng);
                    x(i, j) = cplx(re, im);
                }
            mids.push_back(x * inv_sqrt_psd(x.adjoint() * x));
        }
        return lr_from_middles(h, mids);
    };
    cmat ue = one(s.h.even);
    cmat uo = one(s.h.odd);
    return block_diag(ue, uo);
}

long long unitary_group_dim(const IntMatrix& m) { return m.array().square().sum(); }

long long unitary_group_dim(const IntMatrix& m, int n) {
    if (!admissible(m, n)) throw InputError("multiplicity matrix is not admissible");
    const bool twisted = (n == 3 || n == 5);
    long long d = 0;
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
        long long k = m(a, a);
        d += twisted ? k * (k + 1) / 2 : k * (k - 1) / 2;
        for (Eigen::Index b = a + 1; b < m.cols(); ++b) d += m(a, b) * m(a, b);
    }
    return d;
}

long long unitary_group_dim(const EvenPair& p) { return unitary_group_dim(p.even) + unitary_group_dim(p.odd); }

long long unitary_group_dim(const EvenPair& p, int n) {
    if (!admissible(p, n)) throw InputError("pair is not admissible");
    if (n == 0 || n == 4) {
        int odd_n = n == 0 ? 1 : 3;
        return unitary_group_dim(p.even, odd_n) + unitary_group_dim(p.odd, odd_n);
    }
    return unitary_group_dim(p.even);
}

cmat takagi_unitary(const cmat& k) {
    const auto n = k.rows();
    if ((k - k.transpose()).norm() > 1e-8) throw CheckError("Takagi input is not symmetric");
    rmat a = k.real(), b = k.imag();
    for (double t : {0.7548776662466927, 1.3247179572447461, 2.2360679774997896, 0.3819660112501051}) {
        Eigen::SelfAdjointEigenSolver<rmat> es(a + t * b);
        rmat o = es.eigenvectors();
        cmat oc = o.cast<cplx>();
        cmat d = oc.transpose() * k * oc;
        cmat off = d;
        off.diagonal().setZero();
        if (off.norm() > 1e-8) continue;
        cmat w = oc;
        for (Eigen::Index i = 0; i < n; ++i) w.col(i) *= std::sqrt(d(i, i));
        return w;
    }
    throw CheckError("Takagi factorization failed");
}

cmat symplectic_unitary(const cmat& s) {
    const auto n2 = s.rows();
    if (n2 % 2 != 0) throw CheckError("antisymmetric unitary of odd size");
    if ((s + s.transpose()).norm() > 1e-8) throw CheckError("input is not antisymmetric");
    const auto k = n2 / 2;
    cmat w = cmat::Zero(n2, n2);
    Eigen::Index found = 0;
    while (found < k) {
        cmat span(n2, 2 * found);
        for (Eigen::Index c = 0; c < found; ++c) {
            span.col(2 * c) = w.col(c);
            span.col(2 * c + 1) = w.col(k + c);
        }
        cvec best;
        double best_norm = -1;
        for (Eigen::Index e = 0; e < n2; ++e) {
            cvec v = cvec::Zero(n2);
            v(e) = 1.0;
            if (found) v -= span * (span.adjoint() * v);
            if (v.norm() > best_norm) {
                best_norm = v.norm();
                best = v;
            }
        }
        cvec v = best / best.norm();
        w.col(found) = v;
        w.col(k + found) = s * v.conjugate();
        ++found;
    }
    if ((w * omega(int(k)) * w.transpose() - s).norm() > 1e-8) throw CheckError("symplectic factorization failed");
    return w;
}

}  // namespace spectre
