#include "spectre/ccm.hpp"

#include "spectre/brute.hpp"

namespace spectre {

namespace {

IntMatrix rows_of(std::initializer_list<std::initializer_list<long long>> r) {
    IntMatrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : r) {
        Eigen::Index j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// Spectrum positions.
constexpr int kOne = 0, kOneBar = 1, kTwoL = 2, kTwoR = 3, kThree = 4;
constexpr int kFTwo = 2, kFThree = 3;

const char* kLrLabels[] = {"1", "1bar", "2L", "2R", "3", "3bar"};
const char* kFLabels[] = {"1", "1bar", "2", "3", "3bar"};

// Expected one-generation matrices as printed; everything scales by N.
IntMatrix expected_mu() {
    return rows_of({{0, 0, -1, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 1, 0},
                    {-1, 0, 0, 0, -1, 0},
                    {0, 0, -1, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0}});
}

IntMatrix expected_mu_E() {
    return rows_of({{0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 1, 0},
                    {-1, 0, 0, 0, -1, 0},
                    {0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0}});
}

IntMatrix expected_mu_hat() { return rows_of({{0, -1, 1, 0}, {1, 0, 0, 1}, {-1, 0, 0, -1}, {0, -1, 1, 0}}); }
IntMatrix expected_mu_E_hat() { return rows_of({{0, 0, 0, 0}, {1, 0, 0, 1}, {-1, 0, 0, -1}, {0, 0, 0, 0}}); }

IntMatrix expected_m_even() {
    return rows_of({{1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 1, 0}, {1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}});
}

IntMatrix expected_m_odd() {
    return rows_of({{1, 0, 1, 1, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}});
}

IntMatrix expected_mu_f() {
    return rows_of({{-1, 0, 0, -1, 0}, {-1, 0, 0, -1, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}});
}

IntMatrix expected_cap_F() { return 2 * rows_of({{0, -1, -1}, {1, 0, 1}, {1, -1, 0}}); }
IntMatrix expected_cap_f() { return 2 * rows_of({{-1, 0, -1}, {1, 0, 1}, {0, 0, 0}}); }

/// One generation of fermions as (left point, right point, chirality): left-handed
/// leptons and quarks are even, right-handed ones odd.
struct Multiplet {
    int left, right, chirality;
};

const Multiplet kGeneration[] = {
    {kTwoL, kOne, +1},
    {kTwoL, kThree, +1},
    {kTwoR, kOne, -1},
    {kTwoR, kThree, -1},
};

IntMatrix multiplicity_compressed(const Algebra& a, const cmat& q, const Action& left, const Action& right) {
    return multiplicity_of(
        a, q.cols(), [&](const Element& x) { return cmat(q.adjoint() * left(x) * q); },
        [&](const Element& x) { return cmat(q.adjoint() * right(x) * q); });
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

/// Real basis of {x in span_R(basis) : f(x) = 0}.
std::vector<cmat> real_kernel(const std::vector<cmat>& basis, const std::function<cmat(const cmat&)>& f) {
    if (basis.empty()) return {};
    std::vector<cmat> images;
    for (const auto& b : basis) images.push_back(f(b));
    const Eigen::Index rows = 2 * images.front().size();
    rmat r(rows, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < images.size(); ++j)
        for (Eigen::Index i = 0; i < images[j].size(); ++i) {
            r(2 * i, j) = images[j].data()[i].real();
            r(2 * i + 1, j) = images[j].data()[i].imag();
        }
    rmat ns = nullspace(r);
    std::vector<cmat> out;
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
        cmat x = cmat::Zero(basis.front().rows(), basis.front().cols());
        for (std::size_t j = 0; j < basis.size(); ++j) x += ns(static_cast<Eigen::Index>(j), c) * basis[j];
        out.push_back(x);
    }
    return out;
}

}  // namespace

Algebra algebra_lr() { return Algebra({{Ring::C, 1}, {Ring::H, 1}, {Ring::H, 1}, {Ring::C, 3}}); }
Algebra algebra_f() { return Algebra({{Ring::C, 1}, {Ring::H, 1}, {Ring::C, 3}}); }

Element embed_f_in_lr(const Element& x) {
    if (x.blocks.size() != 3) throw InputError("expected an element of C + H + M_3(C)");
    const cmat& zeta = x.blocks[0];
    return Element{{zeta, x.blocks[1], quaternion_embed(zeta, cmat::Zero(1, 1)), x.blocks[2]}};
}

Element eps_element() {
    Algebra a = algebra_lr();
    Element e = unit_element(a);
    e.blocks[0] *= -1.0;
    e.blocks[3] *= -1.0;
    return e;
}

std::vector<Element> c_f_generators() {
    std::vector<Element> out;
    for (cplx z : {cplx(1.0), I1}) {
        cmat zeta = cmat::Constant(1, 1, z);
        out.push_back(Element{{zeta, quaternion_embed(zeta, cmat::Zero(1, 1)), cmat::Zero(3, 3)}});
    }
    return out;
}

SMFixture build_sm(int generations) {
    if (generations < 1) throw InputError("the number of generations must be positive");
    const long long N = generations;
    SMFixture fx;
    fx.generations = generations;
    fx.lr = algebra_lr();
    fx.f = algebra_f();

    fx.mu_E = IntMatrix::Zero(6, 6);
    for (int copy = 0; copy < generations; ++copy)
        for (const auto& m : kGeneration) fx.mu_E(m.left, m.right) += m.chirality;
    fx.mu = s0_signed(fx.mu_E, 6);
    fx.mu_hat = hat(fx.lr, fx.mu);
    fx.mu_E_hat = hat(fx.lr, fx.mu_E);

    // concrete realization over A_LR
    fx.h_lr = canonical_J(fx.lr, pair_from_signed(fx.mu), 6);
    const Bimodule& even = fx.h_lr.h.even;
    const Bimodule& odd = fx.h_lr.h.odd;
    IntMatrix recovered = multiplicity_of(fx.lr, even.dim(), [&](const Element& x) { return even.left(x); },
                                          [&](const Element& x) { return even.right(x); }) -
                          multiplicity_of(fx.lr, odd.dim(), [&](const Element& x) { return odd.left(x); },
                                          [&](const Element& x) { return odd.right(x); });
    fx.eps_F = fx.h_lr.left(eps_element());

    // restriction to A_F through the concrete actions
    auto restricted = [&](const Bimodule& h) {
        return multiplicity_of(fx.f, h.dim(), [&](const Element& x) { return h.left(embed_f_in_lr(x)); },
                               [&](const Element& x) { return h.right(embed_f_in_lr(x)); });
    };
    fx.pair_F = {restricted(even), restricted(odd)};
    fx.branching = branching_matrix(fx.f, fx.lr, embed_f_in_lr);
    EvenPair via_branching = restrict_pair(pair_from_signed(fx.mu), fx.branching);
    fx.h_f = canonical_J(fx.f, fx.pair_F, 6);

    // H_f: the +1 eigenspace of eps_F, as an A_F-bimodule
    auto f_part = [&](const Bimodule& h) {
        cmat e = h.left(eps_element());
        cmat q = projection_range(0.5 * (eye(h.dim()) + e));
        return multiplicity_compressed(
            fx.f, q, [&](const Element& x) { return h.left(embed_f_in_lr(x)); },
            [&](const Element& x) { return h.right(embed_f_in_lr(x)); });
    };
    fx.mu_f = f_part(even) - f_part(odd);

    fx.cap = intersection_form_signed(fx.lr, fx.mu);
    fx.cap_E = intersection_form_signed(fx.lr, fx.mu_E);
    fx.cap_F = intersection_form(fx.f, fx.pair_F);
    fx.cap_f = intersection_form_signed(fx.f, fx.mu_f);

    fx.checks = {
        {"mu", N * expected_mu(), fx.mu},
        {"mu (realized)", N * expected_mu(), recovered},
        {"mu_E", N * expected_mu_E(), fx.mu_E},
        {"mu_hat", N * expected_mu_hat(), fx.mu_hat},
        {"mu_E_hat", N * expected_mu_E_hat(), fx.mu_E_hat},
        {"m_even", N * expected_m_even(), fx.pair_F.even},
        {"m_odd", N * expected_m_odd(), fx.pair_F.odd},
        {"m_even (branching)", N * expected_m_even(), via_branching.even},
        {"m_odd (branching)", N * expected_m_odd(), via_branching.odd},
        {"mu_f", N * expected_mu_f(), fx.mu_f},
        {"cap", 2 * N * expected_mu_hat(), fx.cap.form},
        {"cap_E", 2 * N * expected_mu_E_hat(), fx.cap_E.form},
        {"cap_F", N * expected_cap_F(), fx.cap_F.form},
        {"cap_f", N * expected_cap_f(), fx.cap_f.form},
    };
    return fx;
}

bool SMReport::pass() const {
    for (const auto& c : fx.checks)
        if (!c.pass()) return false;
    const long long N = fx.generations;
    auto agree = [](const std::optional<long long>& o, long long v) { return !o || *o == v; };
    bool ok = eps_gamma_commutator < 1e-12 && eps_J_anticommutator < 1e-12 && right_linear_commute_with_eps;
    ok = ok && dim_D0_lr == 16 * N * N && dim_D0_hf == dim_D0_lr && agree(oracle_D0_lr, dim_D0_lr) &&
         agree(oracle_D0_lr_eps, dim_D0_lr);
    ok = ok && hf_linmaps.left == 0 && hf_linmaps.right == 8 * N * N && dim_U_even == 2 * N * N &&
         dim_U_odd == 2 * N * N;
    ok = ok && dim_D0_f == 31 * N * N + N && dim_U_f == 6 * N * N && agree(oracle_D0_f, dim_D0_f) &&
         agree(oracle_kernel_f, kernel_f);
    for (const auto& s : slots) ok = ok && s.constrained == s.expected_constrained;
    ok = ok && constrained_dim == constrained_expected && agree(oracle_constrained, constrained_dim);
    ok = ok && mu_hat_degenerate && mu_E_hat_degenerate && !fx.cap_F.nondegenerate && !fx.cap_f.nondegenerate;
    return ok && !quasi_orientable_F && witness == "(1,1)";
}

SMReport sm_report(int generations, bool with_oracle) {
    SMReport r;
    r.fx = build_sm(generations);
    const SMFixture& fx = r.fx;
    const long long N = generations;
    const StructuredBimodule& lr = fx.h_lr;
    with_oracle = with_oracle && lr.dim() <= brute_cap();

    r.eps_gamma_commutator = op_norm(fx.eps_F * lr.gamma() - lr.gamma() * fx.eps_F);
    r.eps_J_anticommutator = op_norm(fx.eps_F * lr.J.U + lr.J.U * fx.eps_F.conjugate());

    // (a) every right-linear H_even -> H_odd map commutes with eps_F
    const Bimodule& even = lr.h.even;
    const Bimodule& odd = lr.h.odd;
    cmat eps_e = fx.eps_F.topLeftCorner(even.dim(), even.dim());
    cmat eps_o = fx.eps_F.bottomRightCorner(odd.dim(), odd.dim());
    r.right_linear_commute_with_eps = true;
    for (const auto& be : even.blocks())
        for (const auto& bo : odd.blocks()) {
            if (be.beta != bo.beta) continue;
            r.right_linear_blocks.push_back(std::string(kLrLabels[be.alpha]) + kLrLabels[be.beta] + " -> " +
                                            kLrLabels[bo.alpha] + kLrLabels[bo.beta]);
            for (const auto& x : full_basis(int(bo.size() / bo.nb), int(be.size() / be.nb))) {
                cmat t = cmat::Zero(odd.dim(), even.dim());
                t.block(bo.offset, be.offset, bo.size(), be.size()) = kron(x, eye(be.nb));
                if (op_norm(eps_o * t - t * eps_e) > 1e-12) r.right_linear_commute_with_eps = false;
            }
        }
    r.dim_D0_lr = dirac_dim(lr);
    if (with_oracle) {
        r.oracle_D0_lr = brute_dirac_dim(lr, {});
        r.oracle_D0_lr_eps = brute_dirac_dim(lr, {}, fx.eps_F);
    }

    // (b) H_f over A_LR
    EvenPair pf = pair_from_signed(fx.mu_E);
    r.dim_D0_hf = dirac_dim(fx.lr, pf);
    r.hf_linmaps = linmap_dims(fx.lr, pf.even, pf.odd);
    r.dim_U_even = unitary_group_dim(pf.even);
    r.dim_U_odd = unitary_group_dim(pf.odd);

    // (c) Dirac parameters over A_F
    const StructuredBimodule& hf = fx.h_f;
    const Algebra& af = fx.f;
    r.dim_D0_f = dirac_dim(hf);
    r.kernel_f = kernel_dim(hf);
    r.kernel_f_paper = 2 * (N * N - 1);
    r.dim_U_f = unitary_group_dim(hf);
    if (with_oracle && hf.dim() <= brute_cap()) {
        r.oracle_D0_f = brute_dirac_dim(hf, {});
        r.oracle_kernel_f = brute_kernel_dim(hf);
    }

    // (d) C_F constraint, slot by slot and in total
    auto gens = c_f_generators();
    const Bimodule& fe = hf.h.even;
    const Bimodule& fo = hf.h.odd;
    ComponentShapes shapes = component_shapes(hf);
    for (const auto& [key, shape] : shapes.M) {
        const auto [alpha, beta, gamma] = key;
        SlotReport s;
        s.label = std::string("M^") + kFLabels[gamma] + "_" + kFLabels[alpha] + kFLabels[beta];
        s.rows = shape.first;
        s.cols = shape.second;
        s.real_dim = 2LL * s.rows * s.cols;
        const Block& be = fe.blocks()[fe.block_index(alpha, beta)];
        const Block& bo = fo.blocks()[fo.block_index(gamma, beta)];
        std::vector<cmat> basis;
        for (const auto& x : full_basis(s.rows, s.cols)) {
            cmat t = cmat::Zero(fo.dim(), fe.dim());
            t.block(bo.offset, be.offset, bo.size(), be.size()) = kron(x, eye(be.nb));
            basis.push_back(t);
        }
        std::vector<cmat> images;
        for (const auto& t : basis) images.push_back(Rn_map(t, hf));
        s.kernel_in_slot = s.real_dim - real_rank(images);
        auto commuting = real_kernel(basis, [&](const cmat& t) {
            cmat out(t.rows() * gens.size(), t.cols());
            for (std::size_t i = 0; i < gens.size(); ++i)
                out.middleRows(i * t.rows(), t.rows()) = fo.left(gens[i]) * t - t * fe.left(gens[i]);
            return out;
        });
        std::vector<cmat> surviving;
        for (const auto& t : commuting) surviving.push_back(Rn_map(t, hf));
        s.constrained = real_rank(surviving);
        if (beta == kOne && alpha == kOne && gamma == kOne)
            s.expected_constrained = N * (N + 1);
        else if ((alpha == kFTwo && (beta == kOne || beta == kFThree)) && (gamma == kOne || gamma == kOneBar))
            s.expected_constrained = 2 * N * N;
        r.slots.push_back(s);
    }
    r.constrained_dim = constrained_dirac_dim(hf, gens);
    r.constrained_expected = 8 * N * N + N * (N + 1);
    if (with_oracle && hf.dim() <= brute_cap()) r.oracle_constrained = brute_dirac_dim(hf, gens);

    // (e)
    r.mu_hat_degenerate = !exact_nonsingular(fx.mu_hat);
    r.mu_E_hat_degenerate = !exact_nonsingular(fx.mu_E_hat);
    r.quasi_orientable_F = is_quasi_orientable(fx.pair_F);
    if (auto w = quasi_orientability_witness(fx.pair_F))
        r.witness = "(" + af.point_label(w->first) + "," + af.point_label(w->second) + ")";
    return r;
}

}  // namespace spectre
