#include "liegeom/catalog.hpp"

#include <utility>

#include "liegeom/connection.hpp"
#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

namespace {

using Terms = std::vector<std::pair<std::string, GaussianRational>>;

Vector combo(const LieAlgebra& g, const Terms& terms) {
    Vector v(g.dim());
    for (const auto& [label, coeff] : terms) v[*g.index_of(label)] += coeff;
    return v;
}

void set(LieAlgebra& g, const std::string& a, const std::string& b, const Terms& terms) {
    g.set_bracket(a, b, combo(g, terms));
}

CMatrix sym3(GaussianRational d0, GaussianRational d1, GaussianRational d2, GaussianRational o01, GaussianRational o02,
             GaussianRational o12) {
    return CMatrix{{d0, o01, o02}, {o01, d1, o12}, {o02, o12, d2}};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

const HomogeneousModel& require_model(const CatalogEntry& e, const std::string& property) {
    if (!e.model) throw Error(ErrorKind::PreconditionViolated, property + " needs a homogeneous model");
    return *e.model;
}

}  // namespace

const std::vector<std::string>& known_properties() {
    static const std::vector<std::string> keys = {
        "class",        "curvature",          "unimodular",    "solvable",   "nilpotent",
        "semisimple",   "center_dim",         "derived_dims",  "lower_central_dims",
        "isotropy_type", "invariance",        "invariant_forms_dim", "center_nontrivial"};
    return keys;
}

const std::string* CatalogEntry::expected_value(const std::string& property) const {
    for (const auto& e : expected)
        if (e.property == property) return &e.value;
    return nullptr;
}

LieAlgebra abelian_c3() { return LieAlgebra({"A", "B", "C"}); }

LieAlgebra heis3() {
    LieAlgebra g({"X'", "Y", "Z"});
    set(g, "Y", "Z", {{"X'", 1}});
    return g;
}

LieAlgebra sol3() {
    LieAlgebra g({"Y", "Z", "T"});
    set(g, "Y", "Z", {{"Z", 1}});
    set(g, "Y", "T", {{"T", -1}});
    return g;
}

LieAlgebra sl2() {
    LieAlgebra g({"H", "E", "F"});
    set(g, "H", "E", {{"E", 2}});
    set(g, "H", "F", {{"F", -2}});
    set(g, "E", "F", {{"H", 1}});
    return g;
}

LieAlgebra c_plus_sl2() {
    LieAlgebra g({"C", "H", "E", "F"});
    set(g, "H", "E", {{"E", 2}});
    set(g, "H", "F", {{"F", -2}});
    set(g, "E", "F", {{"H", 1}});
    return g;
}

LieAlgebra solvable_model_algebra(SolvableCase c) {
    LieAlgebra g({"X'", "Y", "Z", "T"});
    set(g, "Y", "Z", {{"Z", 1}});
    set(g, "Y", "T", {{"T", -1}});
    if (c == SolvableCase::C_SEMIDIRECT_HEIS) set(g, "T", "Z", {{"X'", 1}});
    if (c == SolvableCase::C2_SEMIDIRECT_C2) set(g, "T", "X'", {{"T", 1}});
    return g;
}

HomogeneousModel solvable_model(SolvableCase c) {
    LieAlgebra g = solvable_model_algebra(c);
    const std::size_t n = 4;
    return HomogeneousModel(std::move(g), {unit_vector(n, 1)}, {unit_vector(n, 0), unit_vector(n, 2), unit_vector(n, 3)},
                            {"X'", "Z", "T"}, QuadraticForm(sym3(1, 0, 0, 0, 0, 1)));
}

LieAlgebra build_param_extension(const ParamExtension& p) {
    LieAlgebra g({"X'", "Y", "Z", "T"});
    set(g, "Y", "Z", {{"X'", 1}});
    set(g, "T", "X'", {{"X'", p.c}});
    set(g, "T", "Z", {{"X'", p.m}, {"Z", p.c + p.beta}, {"Y", p.k}});
    set(g, "T", "Y", {{"Z", 1}, {"Y", -p.beta}});
    return g;
}

HomogeneousModel param_extension_model(const ParamExtension& p) {
    const std::size_t n = 4;
    return HomogeneousModel(build_param_extension(p), {unit_vector(n, 1)},
                            {unit_vector(n, 0), unit_vector(n, 2), unit_vector(n, 3)}, {"X'", "Z", "T"},
                            QuadraticForm(sym3(0, 1, 0, 0, 1, 0)));
}

bool check_prop_iv(const ParamExtension& p) {
    if (!p.c.is_zero() || !(p.k + p.beta * p.beta).is_zero())
        throw Error(ErrorKind::PreconditionViolated, "check_prop_iv needs c = 0 and k = -beta^2");
    const LieAlgebra g = build_param_extension(p);
    const std::size_t n = 4;
    Vector zb = unit_vector(n, 2);
    zb[1] = -p.beta;
    const std::vector<Vector> span = {unit_vector(n, 0), zb, unit_vector(n, 3)};
    if (!linearly_independent(span) || !is_subalgebra(g, span)) return false;
    const LieAlgebra h = restrict_to(g, span, {"X'", "Z-bY", "T"});
    if (jacobi_defect(h).magnitude != 0 || !is_unimodular(h)) return false;
    if (classify_3d_unimodular(h) != AlgebraClass::HEIS) return false;
    const auto z = center(h);
    return z.size() == 1 && in_span(z, unit_vector(3, 0));
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    cat.push_back({"flat_c3", abelian_c3(), QuadraticForm(CMatrix::identity(3)), std::nullopt,
                   {{"class", "ABELIAN_C3"},
                    {"curvature", "Constant(0)"},
                    {"unimodular", "true"},
                    {"solvable", "true"},
                    {"nilpotent", "true"},
                    {"semisimple", "false"},
                    {"center_dim", "3"},
                    {"derived_dims", "3,0"}}});

    cat.push_back({"heis3", heis3(), QuadraticForm(sym3(0, 1, 0, 0, 1, 0)), std::nullopt,
                   {{"class", "HEIS"},
                    {"curvature", "Constant(0)"},
                    {"unimodular", "true"},
                    {"solvable", "true"},
                    {"nilpotent", "true"},
                    {"semisimple", "false"},
                    {"center_dim", "1"},
                    {"derived_dims", "3,1,0"},
                    {"lower_central_dims", "3,1,0"}}});

    cat.push_back({"sol3", sol3(), QuadraticForm(sym3(1, 0, 0, 0, 0, 1)), std::nullopt,
                   {{"class", "SOL"},
                    {"curvature", "Constant(0)"},
                    {"unimodular", "true"},
                    {"solvable", "true"},
                    {"nilpotent", "false"},
                    {"semisimple", "false"},
                    {"center_dim", "0"},
                    {"derived_dims", "3,2,0"},
                    {"lower_central_dims", "3,2,2"}}});

    cat.push_back({"sl2", sl2(), killing_form(sl2()), std::nullopt,
                   {{"class", "SL2"},
                    {"curvature", "Constant(-1/8)"},
                    {"unimodular", "true"},
                    {"solvable", "false"},
                    {"nilpotent", "false"},
                    {"semisimple", "true"},
                    {"center_dim", "0"},
                    {"derived_dims", "3,3"}}});

    cat.push_back({"sl2_left_invariant_a2_b1", sl2(), QuadraticForm(sym3(2, 0, 0, 0, 0, 1)), std::nullopt,
                   {{"class", "SL2"}, {"curvature", "Constant(-1/2)"}}});

    cat.push_back({"sl2_left_invariant_a1_b1", sl2(), QuadraticForm(sym3(1, 0, 0, 0, 0, 1)), std::nullopt,
                   {{"class", "SL2"}, {"curvature", "NotConstant"}}});

    {
        LieAlgebra g = c_plus_sl2();
        Vector iso = {1, 1, 0, 0};
        HomogeneousModel m(g, {iso}, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}, {"H", "E", "F"},
                           QuadraticForm(sym3(2, 0, 0, 0, 0, 1)));
        cat.push_back({"sl2_diag_isotropy", g, std::nullopt, std::move(m),
                       {{"center_dim", "1"},
                        {"isotropy_type", "SEMISIMPLE"},
                        {"invariance", "true"},
                        {"invariant_forms_dim", "2"},
                        {"center_nontrivial", "true"}}});
    }
    {
        LieAlgebra g = c_plus_sl2();
        HomogeneousModel m(g, {unit_vector(4, 1)}, {unit_vector(4, 0), unit_vector(4, 2), unit_vector(4, 3)},
                           {"C", "E", "F"}, QuadraticForm(sym3(1, 0, 0, 0, 0, 1)));
        cat.push_back({"c_times_sl2", g, std::nullopt, std::move(m),
                       {{"center_dim", "1"},
                        {"isotropy_type", "SEMISIMPLE"},
                        {"invariance", "true"},
                        {"invariant_forms_dim", "2"},
                        {"center_nontrivial", "true"}}});
    }

    const std::pair<SolvableCase, const char*> cases[] = {{SolvableCase::C_TIMES_SOL, "c_times_sol"},
                                                          {SolvableCase::C_SEMIDIRECT_HEIS, "c_semidirect_heis"},
                                                          {SolvableCase::C2_SEMIDIRECT_C2, "c2_semidirect_c2"}};
    for (const auto& [c, id] : cases) {
        const bool central = c != SolvableCase::C2_SEMIDIRECT_C2;
        cat.push_back({id, solvable_model_algebra(c), std::nullopt, solvable_model(c),
                       {{"solvable", "true"},
                        {"center_dim", central ? "1" : "0"},
                        {"isotropy_type", "SEMISIMPLE"},
                        {"invariance", "true"},
                        {"invariant_forms_dim", "2"},
                        {"center_nontrivial", bool_str(central)}}});
    }

    {
        const ParamExtension p{1, 1, -1, 1};
        cat.push_back({"heis_extension", build_param_extension(p), std::nullopt, param_extension_model(p),
                       {{"isotropy_type", "UNIPOTENT"}, {"invariance", "true"}, {"invariant_forms_dim", "2"}}});
    }
    return cat;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& id) {
    for (const auto& e : catalog)
        if (e.id == id) return e;
    throw Error(ErrorKind::PreconditionViolated, "no catalog entry '" + id + "'");
}

std::string evaluate_property(const CatalogEntry& e, const std::string& property) {
    const LieAlgebra& g = e.algebra;
    if (property == "class") return to_string(classify_3d_unimodular(g));
    if (property == "curvature") {
        if (!e.form) throw Error(ErrorKind::MissingForm, "curvature needs a metric on the algebra");
        return constant_curvature(g, *e.form).to_string();
    }
    if (property == "unimodular") return bool_str(is_unimodular(g));
    if (property == "solvable") return bool_str(is_solvable(g));
    if (property == "nilpotent") return bool_str(is_nilpotent(g));
    if (property == "semisimple") return bool_str(is_semisimple(g));
    if (property == "center_dim") return std::to_string(center(g).size());
    if (property == "derived_dims") return dims_to_string(derived_series(g));
    if (property == "lower_central_dims") return dims_to_string(lower_central_series(g));
    if (property == "isotropy_type") return to_string(isotropy_type(require_model(e, property)));
    if (property == "invariance") return bool_str(check_invariance(require_model(e, property)));
    if (property == "invariant_forms_dim") return std::to_string(invariant_forms(require_model(e, property)).size());
    if (property == "center_nontrivial")
        return bool_str(center_check_semisimple_isotropy(require_model(e, property)));
    throw Error(ErrorKind::PreconditionViolated, "unknown property '" + property + "'");
}

}  // namespace liegeom
