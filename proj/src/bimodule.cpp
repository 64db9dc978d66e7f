#include "spectre/bimodule.hpp"

#include "spectre/real_structure.hpp"

namespace spectre {

void check_multiplicity(const Algebra& a, const IntMatrix& m) {
    if (m.rows() != a.spectrum_size() || m.cols() != a.spectrum_size())
        throw InputError("multiplicity matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", spectrum has " + std::to_string(a.spectrum_size()) + " points");
    if ((m.array() < 0).any()) throw InputError("multiplicity matrix has a negative entry");
}

EvenPair pair_from_signed(const IntMatrix& mu) {
    return {mu.cwiseMax(0), (-mu).cwiseMax(0)};
}

IntMatrix signed_from_pair(const EvenPair& p) { return p.even - p.odd; }

Bimodule::Bimodule(Algebra a, IntMatrix m) : alg_(std::move(a)), m_(std::move(m)) {
    check_multiplicity(alg_, m_);
    for (int alpha = 0; alpha < alg_.spectrum_size(); ++alpha)
        for (int beta = 0; beta < alg_.spectrum_size(); ++beta) {
            if (m_(alpha, beta) == 0) continue;
            Block b{alpha, beta, static_cast<int>(m_(alpha, beta)), alg_.n(alpha), alg_.n(beta), dim_};
            dim_ += b.size();
            blocks_.push_back(b);
        }
}

int Bimodule::block_index(int alpha, int beta) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].alpha == alpha && blocks_[i].beta == beta) return static_cast<int>(i);
    return -1;
}

cmat Bimodule::left(const Element& x) const {
    cmat out = cmat::Zero(dim_, dim_);
    for (const auto& b : blocks_) {
        cmat l = irrep_apply(alg_, b.alpha, x);
        out.block(b.offset, b.offset, b.size(), b.size()) = kron(l, eye(Eigen::Index(b.mult) * b.nb));
    }
    return out;
}

cmat Bimodule::right(const Element& x) const {
    cmat out = cmat::Zero(dim_, dim_);
    for (const auto& b : blocks_) {
        cmat r = irrep_apply(alg_, b.beta, x).transpose();
        out.block(b.offset, b.offset, b.size(), b.size()) = kron(eye(Eigen::Index(b.na) * b.mult), r);
    }
    return out;
}

Bimodule build_bimodule(const Algebra& a, const IntMatrix& m) { return Bimodule(a, m); }

cmat GradedBimodule::gamma() const {
    return block_diag(eye(even.dim()), -eye(odd.dim()));
}

GradedBimodule build_graded(const Algebra& a, const EvenPair& p) {
    return {Bimodule(a, p.even), Bimodule(a, p.odd)};
}

IntMatrix multiplicity_of(const Algebra& a, Eigen::Index dim, const Action& left, const Action& right,
                          double tol) {
    const int s = a.spectrum_size();
    if (dim == 0) return IntMatrix::Zero(s, s);
    // generic elements: a polynomial identity failing somewhere fails at random points
    double defect = (left(unit_element(a)) - eye(dim)).norm() + (right(unit_element(a)) - eye(dim)).norm();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Element x = random_element(a, 2 * seed), y = random_element(a, 2 * seed + 1);
        cmat lx = left(x), ly = left(y), rx = right(x), ry = right(y);
        if (lx.rows() != dim || rx.rows() != dim) throw InputError("action has the wrong size");
        double scale = std::max(1.0, lx.norm() * ly.norm());
        defect = std::max(defect, (left(adjoint(x)) - lx.adjoint()).norm() / scale);
        defect = std::max(defect, (right(adjoint(x)) - rx.adjoint()).norm() / scale);
        defect = std::max(defect, (left(mul(x, y)) - lx * ly).norm() / scale);
        defect = std::max(defect, (right(mul(x, y)) - ry * rx).norm() / scale);
        defect = std::max(defect, (lx * ry - ry * lx).norm() / scale);
    }
    if (defect > tol)
        throw CheckError("actions are not commuting unital *-representations (defect " + std::to_string(defect) +
                         ")");
    auto pl = isotypic_projections(a, left);
    auto pr = isotypic_projections(a, right);
    rmat m(s, s);
    for (int alpha = 0; alpha < s; ++alpha)
        for (int beta = 0; beta < s; ++beta)
            m(alpha, beta) = (pl[alpha] * pr[beta]).trace().real() / (a.n(alpha) * a.n(beta));
    return round_to_int(m, 1e-6, "multiplicity");
}

IntMatrix hat(const Algebra& a, const IntMatrix& m) {
    const int n = a.num_summands();
    if (m.rows() != a.spectrum_size() || m.cols() != a.spectrum_size())
        throw InputError("matrix does not match the spectrum size");
    IntMatrix h = IntMatrix::Zero(n, n);
    for (int alpha = 0; alpha < a.spectrum_size(); ++alpha)
        for (int beta = 0; beta < a.spectrum_size(); ++beta)
            h(a.summand_of(alpha), a.summand_of(beta)) += m(alpha, beta);
    return h;
}

std::optional<std::pair<int, int>> quasi_orientability_witness(const EvenPair& p) {
    for (Eigen::Index i = 0; i < p.even.rows(); ++i)
        for (Eigen::Index j = 0; j < p.even.cols(); ++j)
            if (p.even(i, j) != 0 && p.odd(i, j) != 0) return std::make_pair(int(i), int(j));
    return std::nullopt;
}

bool is_quasi_orientable(const EvenPair& p) { return !quasi_orientability_witness(p).has_value(); }

namespace {

long long sgn(long long x) { return (x > 0) - (x < 0); }

}  // namespace

Orientation is_orientable(const Algebra& a, const IntMatrix& mu) {
    Orientation out;
    const int s = a.spectrum_size();
    auto label = [&](int alpha) { return a.point_label(alpha); };
    for (int i = 0; i < a.num_summands(); ++i) {
        if (a.summands()[i].ring != Ring::C) continue;
        int n = a.linear_point(i), nb = a.conjugate_point(i);
        for (int beta = 0; beta < s; ++beta)
            if (mu(n, beta) * mu(nb, beta) < 0)
                out.failures.push_back("mu(" + label(n) + "," + label(beta) + ") * mu(" + label(nb) + "," +
                                       label(beta) + ") < 0");
        for (int alpha = 0; alpha < s; ++alpha)
            if (mu(alpha, n) * mu(alpha, nb) < 0)
                out.failures.push_back("mu(" + label(alpha) + "," + label(n) + ") * mu(" + label(alpha) + "," +
                                       label(nb) + ") < 0");
        for (int j = 0; j < a.num_summands(); ++j) {
            if (a.summands()[j].ring != Ring::C) continue;
            int m = a.linear_point(j), mb = a.conjugate_point(j);
            if (mu(n, mb) * mu(nb, m) < 0)
                out.failures.push_back("mu(" + label(n) + "," + label(mb) + ") * mu(" + label(nb) + "," +
                                       label(m) + ") < 0");
        }
    }
    // every nonzero entry in a summand block must share one sign
    const int ns = a.num_summands();
    IntMatrix sign = IntMatrix::Zero(ns, ns);
    for (int alpha = 0; alpha < s; ++alpha)
        for (int beta = 0; beta < s; ++beta) {
            long long v = sgn(mu(alpha, beta));
            if (v == 0) continue;
            long long& c = sign(a.summand_of(alpha), a.summand_of(beta));
            if (c == 0)
                c = v;
            else if (c != v)
                out.failures.push_back("mixed signs in summand block (" + std::to_string(a.summand_of(alpha) + 1) +
                                       "," + std::to_string(a.summand_of(beta) + 1) + ")");
        }
    out.orientable = out.failures.empty();
    if (out.orientable) out.coefficients = hat(a, mu).unaryExpr([](long long x) { return sgn(x); });
    return out;
}

double orientation_defect(const Algebra& a, const IntMatrix& mu, const IntMatrix& coefficients) {
    GradedBimodule g = build_graded(a, pair_from_signed(mu));
    cmat recon = cmat::Zero(g.dim(), g.dim());
    for (int i = 0; i < a.num_summands(); ++i)
        for (int j = 0; j < a.num_summands(); ++j) {
            if (coefficients(i, j) == 0) continue;
            recon += g.left(summand_unit(a, i, double(coefficients(i, j)))) * g.right(summand_unit(a, j));
        }
    return g.dim() == 0 ? 0.0 : op_norm(recon - g.gamma());
}

IntersectionForm intersection_form_signed(const Algebra& a, const IntMatrix& mu) {
    IntMatrix h = hat(a, mu);
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) h(i, j) *= a.summands()[i].tau() * a.summands()[j].tau();
    IntersectionForm f;
    f.form = h;
    f.determinant = exact_det(h);
    f.nondegenerate = f.determinant != "0";
    return f;
}

IntersectionForm intersection_form(const Algebra& a, const EvenPair& p) {
    return intersection_form_signed(a, signed_from_pair(p));
}

EvenPair s0_assemble(const EvenPair& pi, int ko) {
    if (ko % 2 != 0) throw InputError("an even pair needs an even KO-dimension");
    KOData k = ko_signs(ko);
    if (k.eps2 == 1) return {pi.even + pi.even.transpose(), pi.odd + pi.odd.transpose()};
    return {pi.even + pi.odd.transpose(), pi.odd + pi.even.transpose()};
}

IntMatrix s0_assemble(const IntMatrix& mi, int ko) {
    if (ko % 2 == 0) throw InputError("a plain multiplicity matrix needs an odd KO-dimension");
    return mi + mi.transpose();
}

IntMatrix s0_signed(const IntMatrix& mu_i, int ko) {
    if (ko % 2 != 0) throw InputError("signed data needs an even KO-dimension");
    return mu_i + ko_signs(ko).eps2 * mu_i.transpose();
}

bool s0_quasi_orientable(const EvenPair& pi, int ko) {
    if (ko % 2 != 0) throw InputError("an even pair needs an even KO-dimension");
    auto disjoint = [](const IntMatrix& x, const IntMatrix& y) {
        return ((x.array() != 0) && (y.array() != 0)).count() == 0;
    };
    if (!disjoint(pi.even, pi.odd)) return false;
    if (ko_signs(ko).eps2 == 1) return disjoint(pi.even, pi.odd.transpose());
    return disjoint(pi.even, pi.even.transpose()) && disjoint(pi.odd, pi.odd.transpose());
}

bool s0_orientable(const Algebra& a, const IntMatrix& mu_i, int ko) {
    if (ko % 2 != 0) throw InputError("signed data needs an even KO-dimension");
    if (!is_orientable(a, mu_i).orientable) return false;
    if (ko_signs(ko).eps2 == 1) return true;
    for (int j = 0; j < a.num_summands(); ++j) {
        if (a.summands()[j].ring != Ring::C) continue;
        int n = a.linear_point(j), nb = a.conjugate_point(j);
        if (mu_i(n, nb) != mu_i(nb, n)) return false;
    }
    return true;
}

bool s0_poincare(const Algebra& a, const EvenPair& pi, int ko) {
    if (ko % 2 != 0) throw InputError("an even pair needs an even KO-dimension");
    IntMatrix h = hat(a, signed_from_pair(pi));
    IntMatrix f = h + ko_signs(ko).eps2 * IntMatrix(h.transpose());
    return exact_nonsingular(f);
}

IntMatrix restrict_matrix(const IntMatrix& m, const IntMatrix& branching) {
    if (branching.cols() != m.rows() || m.rows() != m.cols())
        throw InputError("branching matrix does not match the multiplicity matrix");
    return branching * m * branching.transpose();
}

EvenPair restrict_pair(const EvenPair& p, const IntMatrix& branching) {
    return {restrict_matrix(p.even, branching), restrict_matrix(p.odd, branching)};
}

LinmapDims linmap_dims(const Algebra& a, const IntMatrix& m1, const IntMatrix& m2) {
    check_multiplicity(a, m1);
    check_multiplicity(a, m2);
    const int s = a.spectrum_size();
    LinmapDims d;
    for (int alpha = 0; alpha < s; ++alpha)
        for (int beta = 0; beta < s; ++beta) {
            if (m1(alpha, beta) == 0) continue;
            for (int delta = 0; delta < s; ++delta)
                d.left += m2(alpha, delta) * m1(alpha, beta) * a.n(delta) * a.n(beta);
            for (int gamma = 0; gamma < s; ++gamma)
                d.right += a.n(gamma) * a.n(alpha) * m2(gamma, beta) * m1(alpha, beta);
            d.both += m2(alpha, beta) * m1(alpha, beta);
        }
    return d;
}

}  // namespace spectre
