#include "spectre/algebra.hpp"

#include <random>
#include <sstream>

namespace spectre {

char ring_char(Ring r) {
    switch (r) {
        case Ring::R: return 'R';
        case Ring::C: return 'C';
        case Ring::H: return 'H';
    }
    return '?';
}

Ring ring_from_string(const std::string& s) {
    if (s == "R") return Ring::R;
    if (s == "C") return Ring::C;
    if (s == "H") return Ring::H;
    throw InputError("unknown division ring '" + s + "' (expected R, C or H)");
}

int Summand::real_dim() const {
    switch (ring) {
        case Ring::R: return k * k;
        case Ring::C: return 2 * k * k;
        case Ring::H: return 4 * k * k;
    }
    return 0;
}

Algebra::Algebra(std::vector<Summand> summands) : summands_(std::move(summands)) {
    for (const auto& s : summands_)
        if (s.k <= 0) throw InputError("summand size must be positive");
    spectrum_ = spectre::spectrum(*this);
}

bool Algebra::operator==(const Algebra& o) const {
    if (summands_.size() != o.summands_.size()) return false;
    for (std::size_t i = 0; i < summands_.size(); ++i)
        if (summands_[i].ring != o.summands_[i].ring || summands_[i].k != o.summands_[i].k) return false;
    return true;
}

std::vector<SpecPoint> spectrum(const Algebra& a) {
    std::vector<SpecPoint> out;
    for (int i = 0; i < a.num_summands(); ++i) {
        out.push_back({i, false});
        if (a.summands()[i].ring == Ring::C) out.push_back({i, true});
    }
    return out;
}

int Algebra::index_of(SpecPoint p) const {
    for (int i = 0; i < spectrum_size(); ++i)
        if (spectrum_[i] == p) return i;
    return -1;
}

int Algebra::linear_point(int i) const { return index_of({i, false}); }
int Algebra::conjugate_point(int i) const { return index_of({i, true}); }

int Algebra::real_dim() const {
    int d = 0;
    for (const auto& s : summands_) d += s.real_dim();
    return d;
}

std::string Algebra::point_label(int alpha) const {
    const auto& p = spectrum_[alpha];
    return std::to_string(p.summand + 1) + (p.conjugate ? "bar" : "");
}

std::string Algebra::describe() const {
    if (summands_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i) os << " + ";
        const auto& s = summands_[i];
        if (s.k == 1)
            os << ring_char(s.ring);
        else
            os << "M" << s.k << "(" << ring_char(s.ring) << ")";
    }
    return os.str();
}

cmat irrep_apply(const Algebra& a, SpecPoint p, const Element& x) {
    if (static_cast<int>(x.blocks.size()) != a.num_summands())
        throw InputError("element has the wrong number of summand blocks");
    const cmat& b = x.blocks.at(p.summand);
    int n = a.summands()[p.summand].n();
    if (b.rows() != n || b.cols() != n) throw InputError("element block has the wrong shape");
    return p.conjugate ? cmat(b.conjugate()) : b;
}

cmat irrep_apply(const Algebra& a, int alpha, const Element& x) {
    return irrep_apply(a, a.spectrum()[alpha], x);
}

cmat quaternion_embed(const cmat& z1, const cmat& z2) {
    const auto k = z1.rows();
    cmat out(2 * k, 2 * k);
    out.topLeftCorner(k, k) = z1;
    out.topRightCorner(k, k) = z2;
    out.bottomLeftCorner(k, k) = -z2.conjugate();
    out.bottomRightCorner(k, k) = z1.conjugate();
    return out;
}

cmat omega(int k) {
    cmat o = cmat::Zero(2 * k, 2 * k);
    o.topRightCorner(k, k) = -eye(k);
    o.bottomLeftCorner(k, k) = eye(k);
    return o;
}

Element zero_element(const Algebra& a) {
    Element e;
    for (const auto& s : a.summands()) e.blocks.push_back(cmat::Zero(s.n(), s.n()));
    return e;
}

Element unit_element(const Algebra& a) {
    Element e;
    for (const auto& s : a.summands()) e.blocks.push_back(eye(s.n()));
    return e;
}

Element summand_unit(const Algebra& a, int i, cplx c) {
    if (c.imag() != 0.0 && a.summands()[i].ring != Ring::C)
        throw InputError("complex scalar in a non-complex summand");
    Element e = zero_element(a);
    e.blocks[i] = c * eye(a.summands()[i].n());
    return e;
}

Element add(const Element& x, const Element& y) {
    Element e = x;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) e.blocks[i] += y.blocks[i];
    return e;
}

Element scale(const Element& x, double s) {
    Element e = x;
    for (auto& b : e.blocks) b *= s;
    return e;
}

Element mul(const Element& x, const Element& y) {
    Element e = x;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) e.blocks[i] = x.blocks[i] * y.blocks[i];
    return e;
}

Element adjoint(const Element& x) {
    Element e = x;
    for (auto& b : e.blocks) b = b.adjoint().eval();
    return e;
}

double distance(const Element& x, const Element& y) {
    double d = 0;
    for (std::size_t i = 0; i < x.blocks.size(); ++i) d = std::max(d, (x.blocks[i] - y.blocks[i]).norm());
    return d;
}

void check_element(const Algebra& a, const Element& x, double tol) {
    if (static_cast<int>(x.blocks.size()) != a.num_summands())
        throw InputError("element has " + std::to_string(x.blocks.size()) + " blocks, algebra has " +
                         std::to_string(a.num_summands()) + " summands");
    for (int i = 0; i < a.num_summands(); ++i) {
        const auto& s = a.summands()[i];
        const cmat& b = x.blocks[i];
        if (b.rows() != s.n() || b.cols() != s.n())
            throw InputError("block " + std::to_string(i) + " has the wrong shape");
        if (s.ring == Ring::R && b.imag().norm() > tol)
            throw InputError("block " + std::to_string(i) + " of a real summand has imaginary entries");
        if (s.ring == Ring::H) {
            cmat o = omega(s.k);
            if ((b - o * b.conjugate() * o.transpose()).norm() > tol)
                throw InputError("block " + std::to_string(i) + " is not quaternionic");
        }
    }
}

std::vector<Element> algebra_basis(const Algebra& a) {
    std::vector<Element> out;
    for (int i = 0; i < a.num_summands(); ++i) {
        const auto& s = a.summands()[i];
        for (int p = 0; p < s.k; ++p)
            for (int q = 0; q < s.k; ++q) {
                cmat e = cmat::Zero(s.k, s.k);
                e(p, q) = 1.0;
                std::vector<cmat> blocks;
                switch (s.ring) {
                    case Ring::R: blocks = {e}; break;
                    case Ring::C: blocks = {e, I1 * e}; break;
                    case Ring::H: {
                        cmat z = cmat::Zero(s.k, s.k);
                        blocks = {quaternion_embed(e, z), quaternion_embed(I1 * e, z), quaternion_embed(z, e),
                                  quaternion_embed(z, I1 * e)};
                        break;
                    }
                }
                for (auto& b : blocks) {
                    Element x = zero_element(a);
                    x.blocks[i] = b;
                    out.push_back(std::move(x));
                }
            }
    }
    return out;
}

std::vector<Element> algebra_generators(const Algebra& a) {
    std::vector<Element> out;
    for (int i = 0; i < a.num_summands(); ++i) {
        const auto& s = a.summands()[i];
        cmat id = eye(s.k);
        cmat z = cmat::Zero(s.k, s.k);
        std::vector<cmat> scalars;
        switch (s.ring) {
            case Ring::R: scalars = {id}; break;
            case Ring::C: scalars = {id, I1 * id}; break;
            case Ring::H:
                scalars = {quaternion_embed(id, z), quaternion_embed(I1 * id, z), quaternion_embed(z, id),
                           quaternion_embed(z, I1 * id)};
                break;
        }
        for (int p = 0; p + 1 < s.k; ++p) {
            cmat up = cmat::Zero(s.k, s.k), down = cmat::Zero(s.k, s.k);
            up(p, p + 1) = 1.0;
            down(p + 1, p) = 1.0;
            if (s.ring == Ring::H) {
                scalars.push_back(quaternion_embed(up, z));
                scalars.push_back(quaternion_embed(down, z));
            } else {
                scalars.push_back(up);
                scalars.push_back(down);
            }
        }
        for (auto& b : scalars) {
            Element x = zero_element(a);
            x.blocks[i] = b;
            out.push_back(std::move(x));
        }
    }
    return out;
}

namespace {

cmat gaussian_block(const Summand& s, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto draw = [&](int r, int c, bool complex) {
        cmat m(r, c);
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i) {
                double re = g(rng);
                double im = complex ? g(rng) : 0.0;
                m(i, j) = cplx(re, im);
            }
        return m;
    };
    switch (s.ring) {
        case Ring::R: return draw(s.k, s.k, false);
        case Ring::C: return draw(s.k, s.k, true);
        case Ring::H: {
            cmat z1 = draw(s.k, s.k, true);
            cmat z2 = draw(s.k, s.k, true);
            return quaternion_embed(z1, z2);
        }
    }
    return {};
}

}  // namespace

Element random_unitary(const Algebra& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Element e;
    for (const auto& s : a.summands()) {
        cmat x = gaussian_block(s, rng);
        // polar factor X (X*X)^{-1/2}; equivariant under left and right unitaries
        cmat u = x * inv_sqrt_psd(x.adjoint() * x);
        if (s.ring == Ring::R) u = u.real().cast<cplx>();
        e.blocks.push_back(u);
    }
    return e;
}

Element random_element(const Algebra& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Element e;
    for (const auto& s : a.summands()) e.blocks.push_back(gaussian_block(s, rng));
    return e;
}

std::vector<cmat> isotypic_projections(const Algebra& a, const std::function<cmat(const Element&)>& pi) {
    std::vector<cmat> out;
    for (int alpha = 0; alpha < a.spectrum_size(); ++alpha) {
        const auto& p = a.spectrum()[alpha];
        cmat e = pi(summand_unit(a, p.summand));
        if (a.summands()[p.summand].ring != Ring::C) {
            out.push_back(e);
            continue;
        }
        cmat ie = pi(summand_unit(a, p.summand, I1));
        out.push_back(p.conjugate ? cmat(0.5 * (e + I1 * ie)) : cmat(0.5 * (e - I1 * ie)));
    }
    return out;
}

double homomorphism_defect(const Algebra& sub, const Algebra& amb, const ElementMap& embed) {
    double d = distance(embed(unit_element(sub)), unit_element(amb));
    auto basis = algebra_basis(sub);
    std::vector<Element> images;
    for (const auto& x : basis) {
        images.push_back(embed(x));
        check_element(amb, images.back(), 1e-8);
        d = std::max(d, distance(embed(adjoint(x)), adjoint(images.back())));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            d = std::max(d, distance(embed(mul(basis[i], basis[j])), mul(images[i], images[j])));
    return d;
}

IntMatrix branching_matrix(const Algebra& sub, const Algebra& amb, const ElementMap& embed) {
    double defect = homomorphism_defect(sub, amb, embed);
    if (defect > 1e-8)
        throw CheckError("embedding is not a unital *-homomorphism (defect " + std::to_string(defect) + ")");
    rmat p(sub.spectrum_size(), amb.spectrum_size());
    for (int alpha = 0; alpha < amb.spectrum_size(); ++alpha) {
        auto pi = [&](const Element& x) { return irrep_apply(amb, alpha, embed(x)); };
        auto proj = isotypic_projections(sub, pi);
        for (int beta = 0; beta < sub.spectrum_size(); ++beta)
            p(beta, alpha) = proj[beta].trace().real() / sub.n(beta);
    }
    IntMatrix out = round_to_int(p, 1e-6, "branching multiplicity");
    for (int alpha = 0; alpha < amb.spectrum_size(); ++alpha) {
        long long s = 0;
        for (int beta = 0; beta < sub.spectrum_size(); ++beta) s += out(beta, alpha) * sub.n(beta);
        if (s != amb.n(alpha)) throw CheckError("branching dimensions do not add up");
    }
    return out;
}

}  // namespace spectre
