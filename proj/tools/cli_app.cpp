#include "cli_app.hpp"

#include "spectre/brute.hpp"
#include "spectre/ccm.hpp"
#include "spectre/classify.hpp"
#include "spectre/dirac.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace spectre::cli {

namespace {

using json = nlohmann::ordered_json;

/// Input problems: everything that makes the run an input error (exit 2).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------- tagged values ----------

template <class T>
json exact(const T& v) {
    return json{{"value", v}, {"exact", true}};
}

json approx(double v, double tol) { return json{{"value", v}, {"tolerance", tol}}; }

json int_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json complex_matrix(const cmat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

std::string rational_string(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json int_set(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

// ---------- input parsing ----------

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": malformed JSON at " + line_col(text, e.byte));
    }
}

void only_fields(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw SchemaError(path + "/" + it.key() + ": unknown field");
    }
}

const json& field(const json& j, const std::string& path, const char* name) {
    if (!j.contains(name)) throw SchemaError(path + "/" + name + ": missing field");
    return j.at(name);
}

long long int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return j.get<long long>();
}

Algebra parse_algebra(const json& j, const std::string& path) {
    only_fields(j, path, {"kind", "summands"});
    if (j.contains("kind") && j.at("kind") != "algebra") throw SchemaError(path + "/kind: expected \"algebra\"");
    const json& s = field(j, path, "summands");
    if (!s.is_array()) throw SchemaError(path + "/summands: expected an array");
    std::vector<Summand> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string p = path + "/summands/" + std::to_string(i);
        only_fields(s[i], p, {"ring", "k"});
        const json& r = field(s[i], p, "ring");
        if (!r.is_string()) throw SchemaError(p + "/ring: expected \"R\", \"C\" or \"H\"");
        Ring ring;
        try {
            ring = ring_from_string(r.get<std::string>());
        } catch (const InputError&) {
            throw SchemaError(p + "/ring: expected \"R\", \"C\" or \"H\"");
        }
        long long k = int_at(field(s[i], p, "k"), p + "/k");
        if (k < 1) throw SchemaError(p + "/k: must be positive");
        out.push_back({ring, static_cast<int>(k)});
    }
    return Algebra(out);
}

IntMatrix parse_int_matrix(const json& j, const std::string& path, int size) {
    if (!j.is_array() || static_cast<int>(j.size()) != size)
        throw SchemaError(path + ": expected " + std::to_string(size) + " rows");
    IntMatrix m(size, size);
    for (int i = 0; i < size; ++i) {
        const std::string p = path + "/" + std::to_string(i);
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != size)
            throw SchemaError(p + ": expected " + std::to_string(size) + " entries");
        for (int c = 0; c < size; ++c) m(i, c) = int_at(j[i][c], p + "/" + std::to_string(c));
    }
    return m;
}

cmat parse_complex_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected rows of [re, im] pairs");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    cmat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const std::string p = path + "/" + std::to_string(r);
        if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
            throw SchemaError(p + ": ragged row");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw SchemaError(p + "/" + std::to_string(c) + ": expected [re, im]");
            m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

Element parse_element(const json& j, const Algebra& a, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != a.num_summands())
        throw SchemaError(path + ": expected one matrix per summand");
    Element x;
    for (int i = 0; i < a.num_summands(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        cmat b = parse_complex_matrix(j[i], p);
        if (b.rows() != a.summands()[i].n() || b.cols() != a.summands()[i].n())
            throw SchemaError(p + ": expected a " + std::to_string(a.summands()[i].n()) + "x" +
                              std::to_string(a.summands()[i].n()) + " block");
        x.blocks.push_back(b);
    }
    try {
        check_element(a, x);
    } catch (const InputError& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return x;
}

/// A bimodule problem: odd data (matrix) or even data (pair or signed).
struct Problem {
    std::string kind;
    Algebra algebra;
    std::optional<IntMatrix> matrix;
    std::optional<EvenPair> pair;
    std::optional<IntMatrix> signed_matrix;
};

Problem load_problem(const std::string& file) {
    json j = read_json(file);
    const std::string root = "";
    if (!j.is_object()) throw SchemaError("/: expected an object");
    Problem p;
    if (j.contains("kind")) {
        if (!j.at("kind").is_string()) throw SchemaError("/kind: expected a string");
        p.kind = j.at("kind").get<std::string>();
    } else if (j.contains("summands")) {
        p.kind = "algebra";
    } else if (j.contains("matrix")) {
        p.kind = "bimodule";
    } else if (j.contains("even")) {
        p.kind = "pair";
    } else if (j.contains("signed")) {
        p.kind = "signed";
    } else {
        throw SchemaError("/kind: cannot infer the problem kind");
    }
    if (p.kind == "algebra") {
        p.algebra = parse_algebra(j, root);
        return p;
    }
    if (p.kind == "bimodule" || p.kind == "dirac" || p.kind == "classify") {
        if (p.kind == "classify") {
            only_fields(j, root, {"kind", "algebra"});
            p.algebra = parse_algebra(field(j, root, "algebra"), "/algebra");
            return p;
        }
        only_fields(j, root, {"kind", "algebra", "matrix", "even", "odd", "signed"});
    } else if (p.kind == "pair") {
        only_fields(j, root, {"kind", "algebra", "even", "odd"});
    } else if (p.kind == "signed") {
        only_fields(j, root, {"kind", "algebra", "signed"});
    } else {
        throw SchemaError("/kind: unsupported kind \"" + p.kind + "\" here");
    }
    p.algebra = parse_algebra(field(j, root, "algebra"), "/algebra");
    const int s = p.algebra.spectrum_size();
    int forms = 0;
    if (j.contains("matrix")) {
        p.matrix = parse_int_matrix(j.at("matrix"), "/matrix", s);
        ++forms;
    }
    if (j.contains("even") || j.contains("odd")) {
        p.pair = EvenPair{parse_int_matrix(field(j, root, "even"), "/even", s),
                          parse_int_matrix(field(j, root, "odd"), "/odd", s)};
        ++forms;
    }
    if (j.contains("signed")) {
        p.signed_matrix = parse_int_matrix(j.at("signed"), "/signed", s);
        p.pair = pair_from_signed(*p.signed_matrix);
        ++forms;
    }
    if (forms != 1) throw SchemaError("/: give exactly one of matrix, even/odd, signed");
    auto nonneg = [](const IntMatrix& m, const char* where) {
        if ((m.array() < 0).any()) throw SchemaError(std::string(where) + ": multiplicities must be nonnegative");
    };
    if (p.matrix) nonneg(*p.matrix, "/matrix");
    if (p.pair && !p.signed_matrix) {
        nonneg(p.pair->even, "/even");
        nonneg(p.pair->odd, "/odd");
    }
    return p;
}

Algebra load_algebra(const std::string& file) {
    json j = read_json(file);
    if (j.is_object() && j.contains("algebra")) {
        only_fields(j, "", {"kind", "algebra"});
        return parse_algebra(j.at("algebra"), "/algebra");
    }
    return parse_algebra(j, "");
}

std::vector<Element> load_elements(const std::string& file, const Algebra& a) {
    json j = read_json(file);
    only_fields(j, "", {"kind", "elements"});
    const json& e = field(j, "", "elements");
    if (!e.is_array()) throw SchemaError("/elements: expected an array");
    std::vector<Element> out;
    for (std::size_t i = 0; i < e.size(); ++i) out.push_back(parse_element(e[i], a, "/elements/" + std::to_string(i)));
    return out;
}

StructuredBimodule structured(const Problem& p, std::optional<int> ko) {
    if (p.matrix) return ko ? canonical_J(p.algebra, *p.matrix, *ko) : plain_odd(p.algebra, *p.matrix);
    if (!p.pair) throw SchemaError("/: no bimodule data");
    return ko ? canonical_J(p.algebra, *p.pair, *ko) : plain_even(p.algebra, *p.pair);
}

json algebra_json(const Algebra& a) {
    json summands = json::array();
    for (const auto& s : a.summands())
        summands.push_back({{"ring", std::string(1, ring_char(s.ring))}, {"k", s.k}, {"n", s.n()}});
    json spec = json::array();
    for (int alpha = 0; alpha < a.spectrum_size(); ++alpha)
        spec.push_back({{"label", a.point_label(alpha)}, {"n", a.n(alpha)}});
    return {{"description", a.describe()}, {"summands", summands}, {"spectrum", spec}, {"real_dim", exact(a.real_dim())}};
}

Ring parse_ring(const std::string& s, const char* flag) {
    try {
        return ring_from_string(s);
    } catch (const InputError&) {
        throw SchemaError(std::string(flag) + ": expected R, C or H");
    }
}

// ---------- human output ----------

bool is_number_matrix(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& row : j) {
        if (!row.is_array()) return false;
        for (const auto& e : row)
            if (!e.is_number() && !(e.is_array() && e.size() == 2 && e[0].is_number())) return false;
    }
    return true;
}

std::string scalar(const json& j) {
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        std::ostringstream os;
        os << j[0].get<double>() << (j[1].get<double>() < 0 ? "-" : "+") << std::abs(j[1].get<double>()) << "i";
        return os.str();
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void print_human(const json& j, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        if (j.contains("value") && (j.contains("exact") || j.contains("tolerance")) && j.size() == 2) {
            out << scalar(j.at("value"));
            if (j.contains("tolerance")) out << "  (tol " << j.at("tolerance").get<double>() << ")";
            out << "\n";
            return;
        }
        out << "\n";
        for (auto it = j.begin(); it != j.end(); ++it) {
            out << pad << it.key() << ": ";
            const json& v = it.value();
            if (v.is_object() && v.contains("value") && v.size() == 2 && is_number_matrix(v.at("value"))) {
                out << (v.contains("exact") ? "(exact)" : "") << "\n";
                for (const auto& row : v.at("value")) {
                    out << pad << "  ";
                    for (const auto& e : row) out << std::setw(4) << scalar(e) << " ";
                    out << "\n";
                }
            } else {
                print_human(v, out, indent + 2);
            }
        }
        return;
    }
    if (is_number_matrix(j)) {
        out << "\n";
        for (const auto& row : j) {
            out << pad;
            for (const auto& e : row) out << std::setw(4) << scalar(e) << " ";
            out << "\n";
        }
        return;
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j) flat = flat && !e.is_object() && !e.is_array();
        if (flat) {
            out << "[";
            for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
            out << "]\n";
            return;
        }
        out << "\n";
        for (const auto& e : j) {
            out << pad << "- ";
            print_human(e, out, indent + 2);
        }
        return;
    }
    out << scalar(j) << "\n";
}

// ---------- commands ----------

struct Globals {
    bool json_out = false;
    std::uint64_t seed = 1;
    std::optional<double> tolerance;
    int generations = 1;

    double tol(double fallback) const { return tolerance.value_or(fallback); }
};

std::string status_of(bool pass) { return pass ? "pass" : "fail"; }

json cmd_algebra_info(const std::string& file) {
    Algebra a = load_algebra(file);
    return {{"status", "info"}, {"algebra", algebra_json(a)}};
}

json cmd_bimodule_check(const std::string& file) {
    Problem p = load_problem(file);
    json r;
    r["algebra"] = p.algebra.describe();
    EvenPair pair;
    if (p.matrix) {
        check_multiplicity(p.algebra, *p.matrix);
        Bimodule h(p.algebra, *p.matrix);
        r["kind"] = "odd";
        r["dim"] = exact(h.dim());
        r["hat"] = exact(int_matrix(hat(p.algebra, *p.matrix)));
        pair = {*p.matrix, IntMatrix::Zero(p.matrix->rows(), p.matrix->cols())};
    } else {
        pair = *p.pair;
        r["kind"] = p.signed_matrix ? "signed" : "pair";
    }
    GradedBimodule g = build_graded(p.algebra, pair);
    r["dim"] = exact(g.dim());
    r["even"] = exact(int_matrix(pair.even));
    r["odd"] = exact(int_matrix(pair.odd));
    r["quasi_orientable"] = is_quasi_orientable(pair);
    if (auto w = quasi_orientability_witness(pair))
        r["witness"] = p.algebra.point_label(w->first) + "," + p.algebra.point_label(w->second);
    if (is_quasi_orientable(pair)) {
        IntMatrix mu = signed_from_pair(pair);
        Orientation o = is_orientable(p.algebra, mu);
        r["orientable"] = o.orientable;
        if (!o.failures.empty()) r["orientability_failures"] = o.failures;
    }
    IntersectionForm f = intersection_form(p.algebra, pair);
    r["intersection_form"] = exact(int_matrix(f.form));
    r["determinant"] = exact(f.determinant);
    r["poincare_duality"] = f.nondegenerate;
    bool ok = true;
    if (g.dim() > 0) {
        IntMatrix e = multiplicity_of(p.algebra, g.even.dim(), [&](const Element& x) { return g.even.left(x); },
                                      [&](const Element& x) { return g.even.right(x); });
        IntMatrix o = g.odd.dim() ? multiplicity_of(p.algebra, g.odd.dim(), [&](const Element& x) { return g.odd.left(x); },
                                                    [&](const Element& x) { return g.odd.right(x); })
                                  : IntMatrix::Zero(pair.odd.rows(), pair.odd.cols());
        ok = e == pair.even && o == pair.odd;
        r["realization_recovers_multiplicities"] = ok;
    }
    return {{"status", status_of(ok)}, {"bimodule", r}};
}

json ko_json(const KOData& k) { return {{"n", k.n}, {"eps", k.eps}, {"eps1", k.eps1}, {"eps2", k.eps2}}; }

json cmd_real_admissible(const std::string& file, int ko) {
    Problem p = load_problem(file);
    bool ok = p.matrix ? admissible(*p.matrix, ko) : admissible(*p.pair, ko);
    return {{"status", status_of(ok)}, {"real", {{"ko", ko_json(ko_signs(ko))}, {"admissible", ok}}}};
}

json cmd_real_canonical(const std::string& file, int ko, const Globals& g) {
    Problem p = load_problem(file);
    StructuredBimodule s = structured(p, ko);
    const double tol = g.tol(1e-10);
    const double defect = real_structure_defect(s, s.J);
    Layout lay = layout_of(s);
    const std::size_t n_even = s.h.even.blocks().size();
    auto name = [&](std::size_t i) {
        std::string tag = s.graded ? (i < n_even ? "even " : "odd ") : "";
        return tag + "(" + p.algebra.point_label(lay[i].alpha) + "," + p.algebra.point_label(lay[i].beta) + ")";
    };
    json blocks = json::array();
    for (std::size_t i = 0; i < lay.size(); ++i)
        for (std::size_t j = 0; j < lay.size(); ++j) {
            cmat b = s.J.U.block(lay[i].offset, lay[j].offset, lay[i].size(), lay[j].size());
            if (b.norm() < 1e-14) continue;
            blocks.push_back({{"from", name(j)}, {"to", name(i)}, {"U", complex_matrix(b)}});
        }
    json r = {{"ko", ko_json(*s.ko)}, {"dim", exact(s.dim())}, {"J", "xi -> U conj(xi)"}, {"blocks", blocks},
              {"defect", approx(defect, tol)}};
    return {{"status", status_of(defect < tol)}, {"real", r}};
}

json cmd_dirac_dims(const std::string& file, std::optional<int> ko, bool oracle, const Globals& g) {
    Problem p = load_problem(file);
    StructuredBimodule s = structured(p, ko);
    DiracSpaceReport d = dirac_space_dim(s, oracle, g.seed);
    json r = {{"kind", kind_name(kind_of(s))}, {"dim_H", exact(s.dim())}, {"dim_D0", exact(d.dim_D0)},
              {"dim_U", exact(d.dim_U)}};
    if (d.dim_kernel) r["dim_kernel_Rn"] = exact(*d.dim_kernel);
    if (d.moduli_estimate)
        r["moduli_estimate"] = {{"value", *d.moduli_estimate}, {"generic_estimate", d.moduli_is_generic_estimate}};
    bool checked = false, ok = true;
    auto put = [&](const char* key, const std::optional<long long>& o, long long expected) {
        if (!o) return;
        checked = true;
        ok = ok && *o == expected;
        r[key] = exact(*o);
    };
    put("oracle_D0", d.oracle_D0, d.dim_D0);
    put("oracle_U", d.oracle_U, d.dim_U);
    if (d.dim_kernel) put("oracle_kernel_Rn", d.oracle_kernel, *d.dim_kernel);
    if (!checked) r["oracle"] = "skipped (dimension above SPECTRE_MAX_BRUTE_DIM or disabled)";
    return {{"status", checked ? status_of(ok) : "info"}, {"dirac", r}};
}

json cmd_dirac_random(const std::string& file, std::optional<int> ko, const Globals& g) {
    Problem p = load_problem(file);
    StructuredBimodule s = structured(p, ko);
    const double tol = g.tol(1e-9);
    DiracComponents c = random_components(s, g.seed);
    cmat d = assemble_dirac(c, s);
    RelationDefects e = dirac_defects(d, s);
    const double scale = std::max(1.0, op_norm(d));
    bool ok = e.self_adjoint <= tol * scale && e.order_one <= tol * scale && e.grading <= tol * scale &&
              e.real <= tol * scale;
    json r = {{"kind", kind_name(kind_of(s))},
              {"seed", g.seed},
              {"components", {{"M", c.M.size()}, {"N", c.N.size()}}},
              {"norm", approx(op_norm(d), tol)},
              {"defects (relative to max(1, norm))",
               {{"self_adjoint", approx(e.self_adjoint / scale, tol)},
                {"order_one", approx(e.order_one / scale, tol)},
                {"grading", approx(e.grading / scale, tol)},
                {"real", approx(e.real / scale, tol)}}},
              {"operator", complex_matrix(d)}};
    return {{"status", status_of(ok)}, {"dirac", r}};
}

json cmd_dirac_constrained(const std::string& file, std::optional<int> ko, const std::string& central, bool oracle) {
    Problem p = load_problem(file);
    StructuredBimodule s = structured(p, ko);
    std::vector<Element> gens = load_elements(central, p.algebra);
    long long dim = constrained_dirac_dim(s, gens);
    json r = {{"kind", kind_name(kind_of(s))}, {"generators", gens.size()}, {"dim", exact(dim)},
              {"dim_D0", exact(dirac_dim(s))}};
    std::string status = "info";
    if (oracle && s.dim() <= brute_cap()) {
        long long o = brute_dirac_dim(s, gens);
        r["oracle"] = exact(o);
        status = status_of(o == dim);
    }
    return {{"status", status}, {"dirac", r}};
}

json triplet_json(const IrreducibleTriplet& t) {
    const Algebra& a = t.algebra;
    json j = {{"type", t.type == TripletType::A ? "A" : "B"},
              {"skeleton", t.type == TripletType::A
                               ? json::array({a.point_label(t.alpha)})
                               : json::array({a.point_label(t.alpha), a.point_label(t.beta)})},
              {"m", exact(int_matrix(t.m))},
              {"separating", is_separating(t)}};
    return j;
}

json cmd_cc_classify(const std::string& file, int ko) {
    Algebra a = load_algebra(file);
    auto ts = classify_irreducible(a, ko);
    json list = json::array();
    bool ok = true;
    for (const auto& t : ts) {
        json j = triplet_json(t);
        TripletChecks c = check_triplet(t);
        j["checks"] = {{"faithful", c.faithful},
                       {"complex_linear", c.complex_linear},
                       {"separating_vector_injective", c.separating},
                       {"commutant_selfadjoint_dim", exact(c.commutant_selfadjoint_dim)},
                       {"irreducible", c.irreducible}};
        ok = ok && c.pass();
        list.push_back(j);
    }
    return {{"status", status_of(ok)},
            {"classification", {{"algebra", a.describe()}, {"ko", ko}, {"count", ts.size()}, {"triplets", list}}}};
}

json summand_grading_json(const SummandGrading& g) {
    return {{"ring", std::string(1, ring_char(g.ring))}, {"n", g.n}, {"form", g.imaginary ? "i M_k(K)" : "M_k(K)"},
            {"signature", json::array({g.r, g.n - g.r})}};
}

json cmd_cc_gradings(const std::string& file, int ko, std::optional<int> eps2, const Globals& g) {
    Algebra a = load_algebra(file);
    const double tol = g.tol(1e-10);
    auto ts = classify_irreducible(a, ko);
    json list = json::array();
    bool ok = true;
    for (const auto& t : ts) {
        json tj = triplet_json(t);
        json gl = json::array();
        for (const auto& gs : compatible_gradings(t, eps2, g.seed)) {
            GradingCheck c = check_grading(t, gs);
            json j = {{"family", family_name(gs.family)}, {"eps2", gs.eps2}};
            if (gs.family == GradingFamily::TypeA) j["sign"] = gs.sign;
            if (!gs.g.empty()) {
                json parts = json::array();
                for (const auto& x : gs.g) parts.push_back(summand_grading_json(x));
                j["summand_gradings"] = parts;
            }
            if (gs.family == GradingFamily::OffDiagonal)
                j["u_eta"] = {{"u", complex_matrix(gs.u)}, {"eta", json::array({gs.eta.real(), gs.eta.imag()})}};
            j["defects"] = {{"self_adjoint", approx(c.selfadjoint_defect, tol)},
                            {"unitary", approx(c.unitary_defect, tol)},
                            {"gamma_J", approx(c.real_structure_defect, tol)},
                            {"preserves_lambda_A", approx(c.algebra_defect, tol)}};
            bool pass = c.pass(tol);
            if (gs.family == GradingFamily::Diagonal && gs.eps2 == -1) {
                try {
                    EvenSubalgebra e = even_subalgebra(t, gs);
                    EvenCrossCheck x = cross_check_even(t, gs, e);
                    j["even_subalgebra"] = {{"case", e.case_number},
                                            {"algebra", e.algebra.describe()},
                                            {"m_even", exact(int_matrix(e.pair.even))},
                                            {"m_odd", exact(int_matrix(e.pair.odd))},
                                            {"commutant_dim", exact(x.commutant_dim)},
                                            {"structural_dim", exact(x.structural_dim)},
                                            {"multiplicities_match", x.pairs_match}};
                    pass = pass && x.pass();
                } catch (const InputError& err) {
                    j["even_subalgebra"] = std::string("not normalized: ") + err.what();
                }
            }
            j["pass"] = pass;
            ok = ok && pass;
            gl.push_back(j);
        }
        tj["gradings"] = gl;
        list.push_back(tj);
    }
    return {{"status", status_of(ok)}, {"gradings", {{"algebra", a.describe()}, {"ko", ko}, {"triplets", list}}}};
}

json maximize_one(const OffDiagonalProblem& p, bool brute) {
    RMaxResult m = r_max(p);
    json values = json::array();
    for (const auto& [r, v] : m.values) {
        json e = {{"r", r}, {"d", exact(rational_string(v))}, {"case", d_case(p, r)}};
        if (brute) {
            ATReport at = A_of_T(p, compatible_partial_isometry(p, r));
            e["brute_dim_A0"] = exact(at.dim0);
            if (at.displayed_dim0) e["displayed_dim_A0"] = exact(*at.displayed_dim0);
        }
        values.push_back(e);
    }
    json j = {{"K1", std::string(1, ring_char(p.k1))},
              {"K2", std::string(1, ring_char(p.k2))},
              {"r1", p.r1},
              {"r2", p.r2},
              {"values", values},
              {"R_max", int_set(m.r_max)}};
    if (!m.uncovered.empty()) j["uncovered_ranks"] = m.uncovered;
    j["table"] = {{"case", m.comparison.table_case},
                  {"R_max", int_set(m.comparison.table)},
                  {"agreement", m.comparison.agrees ? "yes" : "no"}};
    return j;
}

json cmd_cc_maximize(const std::string& k1, const std::string& k2, int r1, int r2, int r1c, int r2c, bool all,
                     bool brute) {
    OffDiagonalProblem p{parse_ring(k1, "--k1"), parse_ring(k2, "--k2"), r1, r2, r1c, r2c};
    json out;
    if (!all) {
        out = maximize_one(p, brute);
    } else {
        json v = json::array();
        for (const auto& [label, q] : domain_variants(p)) {
            json j = maximize_one(q, brute);
            j["domain"] = label;
            v.push_back(j);
        }
        out = {{"variants", v}};
    }
    return {{"status", "info"}, {"maximize", out}};
}

json cmd_sm_reproduce(int generations, bool oracle) {
    if (generations < 1) throw SchemaError("--generations: must be positive");
    SMReport r = sm_report(generations, oracle);
    const SMFixture& fx = r.fx;
    json checks = json::array();
    for (const auto& c : fx.checks) {
        json j = {{"name", c.name}, {"result", c.pass() ? "PASS" : "FAIL"}, {"computed", exact(int_matrix(c.computed))}};
        if (!c.pass()) j["expected"] = exact(int_matrix(c.expected));
        checks.push_back(j);
    }
    auto opt = [](const std::optional<long long>& o) { return o ? exact(*o) : json("skipped"); };
    json slots = json::array();
    for (const auto& s : r.slots)
        slots.push_back({{"slot", s.label},
                         {"shape", json::array({s.rows, s.cols})},
                         {"real_dim", exact(s.real_dim)},
                         {"kernel", exact(s.kernel_in_slot)},
                         {"constrained", exact(s.constrained)},
                         {"expected", exact(s.expected_constrained)}});
    json j = {
        {"generations", generations},
        {"matrices", checks},
        {"intersection_form_F", exact(int_matrix(fx.cap_F.form))},
        {"intersection_form_f", exact(int_matrix(fx.cap_f.form))},
        {"epsilon_F", {{"commutes_with_gamma", approx(r.eps_gamma_commutator, 1e-10)},
                       {"anticommutes_with_J", approx(r.eps_J_anticommutator, 1e-10)}}},
        {"off_diagonal_exclusion",
         {{"right_linear_blocks", r.right_linear_blocks},
          {"commute_with_epsilon", r.right_linear_commute_with_eps},
          {"dim_D0_LR", exact(r.dim_D0_lr)},
          {"oracle_D0_LR", opt(r.oracle_D0_lr)},
          {"oracle_D0_LR_with_epsilon", opt(r.oracle_D0_lr_eps)}}},
        {"H_f_over_A_LR",
         {{"dim_D0", exact(r.dim_D0_hf)},
          {"left_linear_maps", exact(r.hf_linmaps.left)},
          {"right_linear_maps", exact(r.hf_linmaps.right)},
          {"dim_U_even", exact(r.dim_U_even)},
          {"dim_U_odd", exact(r.dim_U_odd)}}},
        {"A_F", {{"dim_D0", exact(r.dim_D0_f)},
                 {"oracle_D0", opt(r.oracle_D0_f)},
                 {"kernel_Rn", exact(r.kernel_f)},
                 {"kernel_Rn_printed", exact(r.kernel_f_paper)},
                 {"oracle_kernel_Rn", opt(r.oracle_kernel_f)},
                 {"dim_U", exact(r.dim_U_f)},
                 {"slots", slots}}},
        {"C_F_constrained", {{"dim", exact(r.constrained_dim)},
                             {"expected", exact(r.constrained_expected)},
                             {"oracle", opt(r.oracle_constrained)}}},
        {"degeneracy", {{"mu_hat", r.mu_hat_degenerate},
                        {"mu_E_hat", r.mu_E_hat_degenerate},
                        {"intersection_form_F", !fx.cap_F.nondegenerate},
                        {"intersection_form_f", !fx.cap_f.nondegenerate},
                        {"H_F_quasi_orientable", r.quasi_orientable_F},
                        {"witness", r.witness}}}};
    return {{"status", status_of(r.pass())}, {"sm", j}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite real spectral triples: bimodules, real structures, Dirac operators, classification"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    double tol_value = 0;
    auto* tol_opt = app.add_option("--tolerance", tol_value, "Override floating-point check tolerances");
    app.add_flag("--json", g.json_out, "Emit the report as JSON");
    app.add_option("--seed", g.seed, "Seed for every random choice");
    app.add_option("--generations", g.generations, "Number of generations for sm reproduce");

    std::string file, central, algebra_file;
    int ko = -1;
    std::optional<int> ko_opt, eps2_opt;
    bool no_oracle = false;

    auto* alg = app.add_subcommand("algebra", "Algebra data")->require_subcommand(1);
    auto* alg_info = alg->add_subcommand("info", "Summands, spectrum and dimensions");
    alg_info->add_option("file", file, "Algebra JSON")->required();

    auto* bim = app.add_subcommand("bimodule", "Bimodule data")->require_subcommand(1);
    auto* bim_check = bim->add_subcommand("check", "Orientability, intersection form and realization");
    bim_check->add_option("file", file, "Bimodule JSON")->required();

    auto* real = app.add_subcommand("real", "Real structures")->require_subcommand(1);
    auto* real_adm = real->add_subcommand("admissible", "Admissibility for a KO-dimension");
    auto* real_can = real->add_subcommand("canonical", "Canonical real structure");
    for (auto* c : {real_adm, real_can}) {
        c->add_option("--ko", ko, "KO-dimension mod 8")->required()->check(CLI::Range(0, 7));
        c->add_option("file", file, "Bimodule JSON")->required();
    }

    auto* dirac = app.add_subcommand("dirac", "Dirac operators")->require_subcommand(1);
    auto* d_dims = dirac->add_subcommand("dims", "Dimensions with brute-force confirmation");
    auto* d_rand = dirac->add_subcommand("random", "Assemble a random Dirac operator and verify it");
    auto* d_con = dirac->add_subcommand("constrained", "Dirac operators commuting with a subalgebra");
    for (auto* c : {d_dims, d_rand, d_con}) {
        c->add_option("--ko", ko_opt, "KO-dimension mod 8 (omit for no real structure)")->check(CLI::Range(0, 7));
        c->add_option("file", file, "Bimodule JSON")->required();
    }
    d_dims->add_flag("--no-oracle", no_oracle, "Skip the brute-force check");
    d_con->add_flag("--no-oracle", no_oracle, "Skip the brute-force check");
    d_con->add_option("--central", central, "JSON with the subalgebra generators")->required();

    auto* cc = app.add_subcommand("cc", "Irreducible triplets and off-diagonal subalgebras")->require_subcommand(1);
    auto* cc_class = cc->add_subcommand("classify", "Irreducible triplets over an algebra");
    auto* cc_grad = cc->add_subcommand("gradings", "Compatible gradings and even subalgebras");
    for (auto* c : {cc_class, cc_grad}) {
        c->add_option("--algebra", algebra_file, "Algebra JSON")->required();
        c->add_option("--ko", ko, "Odd KO-dimension")->required()->check(CLI::IsMember({1, 3, 5, 7}));
    }
    cc_grad->add_option("--eps2", eps2_opt, "Only gradings with gamma J = eps2 J gamma")->check(CLI::IsMember({-1, 1}));
    auto* cc_max = cc->add_subcommand("maximize", "d(r) and R_max");
    std::string k1, k2;
    int r1 = 1, r2 = 1, r1c = 0, r2c = 0;
    bool all_domains = false, brute = false;
    cc_max->add_option("--k1", k1, "R, C or H")->required();
    cc_max->add_option("--k2", k2, "R, C or H")->required();
    cc_max->add_option("--r1", r1, "r_1")->required()->check(CLI::PositiveNumber);
    cc_max->add_option("--r2", r2, "r_2")->required()->check(CLI::PositiveNumber);
    cc_max->add_option("--r1c", r1c, "r_1' (for --all-domains)")->check(CLI::NonNegativeNumber);
    cc_max->add_option("--r2c", r2c, "r_2' (for --all-domains)")->check(CLI::NonNegativeNumber);
    cc_max->add_flag("--all-domains", all_domains, "Evaluate the four domain-range variants");
    cc_max->add_flag("--brute", brute, "Add brute-force dim A_0(T) at a compatible T of each rank");

    auto* sm = app.add_subcommand("sm", "Standard Model fixtures")->require_subcommand(1);
    auto* sm_rep = sm->add_subcommand("reproduce", "Reproduce the matrices and dimension counts");
    sm_rep->add_flag("--no-oracle", no_oracle, "Skip brute-force confirmations");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (tol_opt->count()) {
        if (!(tol_value > 0)) {
            err << "error: --tolerance must be positive\n";
            return 2;
        }
        g.tolerance = tol_value;
    }

    json report;
    std::string command;
    try {
        if (*alg_info) {
            command = "algebra info";
            report = cmd_algebra_info(file);
        } else if (*bim_check) {
            command = "bimodule check";
            report = cmd_bimodule_check(file);
        } else if (*real_adm) {
            command = "real admissible";
            report = cmd_real_admissible(file, ko);
        } else if (*real_can) {
            command = "real canonical";
            report = cmd_real_canonical(file, ko, g);
        } else if (*d_dims) {
            command = "dirac dims";
            report = cmd_dirac_dims(file, ko_opt, !no_oracle, g);
        } else if (*d_rand) {
            command = "dirac random";
            report = cmd_dirac_random(file, ko_opt, g);
        } else if (*d_con) {
            command = "dirac constrained";
            report = cmd_dirac_constrained(file, ko_opt, central, !no_oracle);
        } else if (*cc_class) {
            command = "cc classify";
            report = cmd_cc_classify(algebra_file, ko);
        } else if (*cc_grad) {
            command = "cc gradings";
            report = cmd_cc_gradings(algebra_file, ko, eps2_opt, g);
        } else if (*cc_max) {
            command = "cc maximize";
            report = cmd_cc_maximize(k1, k2, r1, r2, r1c, r2c, all_domains, brute);
        } else if (*sm_rep) {
            command = "sm reproduce";
            report = cmd_sm_reproduce(g.generations, !no_oracle);
        }
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CheckError& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }

    json full = {{"command", command}, {"status", report.at("status")}};
    if (g.tolerance) full["tolerance_override"] = *g.tolerance;
    for (auto it = report.begin(); it != report.end(); ++it)
        if (it.key() != "status") full[it.key()] = it.value();
    if (g.json_out) {
        out << full.dump(2) << "\n";
    } else {
        std::string st = full.at("status").get<std::string>();
        for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << command << ": " << st << "\n";
        for (auto it = full.begin(); it != full.end(); ++it) {
            if (it.key() == "command" || it.key() == "status") continue;
            out << it.key() << ": ";
            print_human(it.value(), out, 2);
        }
    }
    const std::string st = full.at("status").get<std::string>();
    return st == "fail" ? 1 : 0;
}

}  // namespace spectre::cli
