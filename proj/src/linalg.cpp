#include "spectre/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace spectre {

using boost::multiprecision::cpp_int;

cmat kron(const cmat& a, const cmat& b) {
    cmat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

cmat eye(Eigen::Index n) { return cmat::Identity(n, n); }

cmat block_diag(const cmat& a, const cmat& b) {
    cmat out = cmat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

double op_norm(const cmat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<cmat> svd(a);
    return svd.singularValues()(0);
}

namespace {

Eigen::Index count_above(const rvec& s, double tol) {
    double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * scale) ++r;
    return r;
}

// BDCSVD in Eigen 3.4.0 misreports singular values on some highly degenerate
// structured systems, so the QR-preconditioned Jacobi SVD is used throughout.
template <class M>
M nullspace_impl(const M& a, double tol) {
    const Eigen::Index n = a.cols();
    if (n == 0) return M(0, 0);
    if (a.rows() == 0) return M::Identity(n, n);
    Eigen::JacobiSVD<M> svd(a, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(n - count_above(svd.singularValues(), tol));
}

template <class M>
Eigen::Index rank_impl(const M& a, double tol) {
    if (a.size() == 0) return 0;
    return count_above(Eigen::JacobiSVD<M>(a).singularValues(), tol);
}

}  // namespace

cmat nullspace(const cmat& a, double tol) { return nullspace_impl(a, tol); }
rmat nullspace(const rmat& a, double tol) { return nullspace_impl(a, tol); }
Eigen::Index rank(const cmat& a, double tol) { return rank_impl(a, tol); }
Eigen::Index rank(const rmat& a, double tol) { return rank_impl(a, tol); }

cmat common_nullspace(Eigen::Index dim, const std::vector<std::function<cvec(const cvec&)>>& constraints,
                      double tol) {
    cmat basis = cmat::Identity(dim, dim);
    for (const auto& f : constraints) {
        if (basis.cols() == 0) break;
        std::vector<cvec> images;
        images.reserve(basis.cols());
        Eigen::Index rows = 0;
        for (Eigen::Index j = 0; j < basis.cols(); ++j) {
            images.push_back(f(basis.col(j)));
            rows = images.back().size();
        }
        cmat c(rows, basis.cols());
        for (Eigen::Index j = 0; j < basis.cols(); ++j) c.col(j) = images[j];
        if (c.norm() < tol) continue;
        cmat z = nullspace(c, tol);
        basis = basis * z;
    }
    return basis;
}

Eigen::Index real_nullity(const std::vector<cmat>& basis, const std::function<cmat(const cmat&)>& f,
                          double tol) {
    std::vector<cmat> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(f(b));
    return static_cast<Eigen::Index>(basis.size()) - real_rank(images, tol);
}

std::string exact_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0) return "1";
    std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m[i][j] = a(i, j);
    cpp_int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            Eigen::Index p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return "0";
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    cpp_int d = m[n - 1][n - 1] * sign;
    return d.str();
}

bool exact_nonsingular(const IntMatrix& a) { return exact_det(a) != "0"; }

cmat inv_sqrt_psd(const cmat& h) {
    Eigen::SelfAdjointEigenSolver<cmat> es(h);
    rvec ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) <= 0) throw CheckError("inverse square root of a singular matrix");
        ev(i) = 1.0 / std::sqrt(ev(i));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

cmat projection_range(const cmat& p) {
    if (p.rows() == 0) return cmat(0, 0);
    Eigen::SelfAdjointEigenSolver<cmat> es(p);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    cmat q(p.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    return q;
}

IntMatrix round_to_int(const rmat& a, double tol, const std::string& what) {
    IntMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            double r = std::round(a(i, j));
            if (std::abs(r - a(i, j)) > tol)
                throw CheckError(what + ": entry " + std::to_string(a(i, j)) + " is not an integer");
            out(i, j) = static_cast<long long>(r);
        }
    return out;
}

cvec vec(const cmat& a) { return Eigen::Map<const cvec>(a.data(), a.size()); }

cmat unvec(const cvec& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const cmat>(v.data(), rows, cols);
}

}  // namespace spectre

namespace spectre {

std::vector<cmat> real_span_basis(const std::vector<cmat>& mats, double tol) {
    if (mats.empty()) return {};
    const auto rows = mats.front().rows(), cols = mats.front().cols();
    const auto k = static_cast<Eigen::Index>(mats.size());
    // keep only real coordinates where some matrix is nonzero
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < rows * cols; ++i)
        for (const auto& m : mats) {
            if (m.data()[i] != cplx(0.0)) {
                support.push_back(i);
                break;
            }
        }
    const auto s = static_cast<Eigen::Index>(support.size());
    rmat r(2 * s, k);
    for (Eigen::Index j = 0; j < k; ++j)
        for (Eigen::Index i = 0; i < s; ++i) {
            cplx z = mats[j].data()[support[i]];
            r(2 * i, j) = z.real();
            r(2 * i + 1, j) = z.imag();
        }
    rmat g = r.transpose() * r;
    Eigen::SelfAdjointEigenSolver<rmat> es(g);
    const rvec& ev = es.eigenvalues();
    double top = std::max(1.0, ev.size() ? ev(ev.size() - 1) : 0.0);
    std::vector<cmat> out;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) <= 0.1 * tol * top) continue;
        rvec v = r * es.eigenvectors().col(i) / std::sqrt(ev(i));
        cmat m = cmat::Zero(rows, cols);
        for (Eigen::Index j = 0; j < s; ++j) m.data()[support[j]] = cplx(v(2 * j), v(2 * j + 1));
        out.push_back(m);
    }
    return out;
}

Eigen::Index real_rank(const std::vector<cmat>& mats, double tol) {
    return static_cast<Eigen::Index>(real_span_basis(mats, tol).size());
}

}  // namespace spectre
