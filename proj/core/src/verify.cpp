#include "liegeom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liegeom/connection.hpp"
#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"
#include "liegeom/mobius.hpp"
#include "liegeom/orthogonal.hpp"
#include "liegeom/spec_file.hpp"

namespace liegeom {

namespace {

CheckResult pass(std::string value) { return {"", true, "", std::move(value), std::nullopt}; }

CheckResult fail(std::string witness, std::string value, std::optional<Triple> triple = std::nullopt) {
    return {"", false, std::move(witness), std::move(value), triple};
}

CheckResult verdict(bool ok, std::string value, std::string witness = {}) {
    return ok ? pass(std::move(value)) : fail(witness.empty() ? "got " + value : std::move(witness), std::move(value));
}

void run(std::vector<CheckResult>& out, std::string id, const std::function<CheckResult()>& body) {
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = fail(e.what(), "error");
    }
    r.id = std::move(id);
    out.push_back(std::move(r));
}

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string triple_labels(const LieAlgebra& g, const Triple& t) {
    const auto& n = g.basis_names();
    return "(" + n[t[0]] + "," + n[t[1]] + "," + n[t[2]] + ")";
}

std::string triple_indices(const Triple& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

GaussianRational random_gaussian(std::mt19937_64& rng, long bound = 4) {
    auto part = [&] {
        const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
        const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(bound)) + 1;
        return Rational(num, den);
    };
    Rational re = part();
    return GaussianRational(re, part());
}

CMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        CMatrix p(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = random_gaussian(rng, 3);
        if (!determinant(p).is_zero()) return p;
    }
}

// First basis triple (i, j, l) where R(e_i, e_j)e_l departs from the
// constant-curvature tensor with the given k.
std::optional<Triple> constant_curvature_deviation(const QuadraticForm& q, const CurvatureTensor& r,
                                                   const GaussianRational& k) {
    const std::size_t n = q.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vector expected(n);
                expected[i] += k * q(j, l);
                expected[j] -= k * q(i, l);
                if (r.apply_basis(i, j, l) != expected) return Triple{i, j, l};
            }
    return std::nullopt;
}

CheckResult check_expected(const CatalogEntry& e, const Expected& exp) {
    const std::string actual = evaluate_property(e, exp.property);
    if (strip(actual) == strip(exp.value)) return pass(actual);
    std::string witness = "expected " + exp.value + ", got " + actual;
    std::optional<Triple> triple;
    if (exp.property == "curvature" && e.form) {
        const auto r = curvature(e.algebra, levi_civita(e.algebra, *e.form));
        const std::string want = strip(exp.value);
        if (want.rfind("Constant(", 0) == 0 && want.back() == ')') {
            const auto k = parse_scalar(want.substr(9, want.size() - 10));
            triple = constant_curvature_deviation(*e.form, r, k);
        } else {
            triple = constant_curvature(*e.form, r).witness;
        }
        if (triple) witness += "; R differs at " + triple_labels(e.algebra, *triple);
    }
    return fail(witness, actual, triple);
}

CheckResult triple_check(const LieAlgebra& g, const std::optional<Triple>& t, const char* what) {
    if (!t) return pass("0");
    return fail(std::string(what) + " fails at " + triple_labels(g, *t), "nonzero", t);
}

}  // namespace

std::size_t VerifyReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t VerifyReport::fail_count() const { return checks.size() - pass_count(); }

const CheckResult* VerifyReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::uint64_t fragment_seed(std::uint64_t seed, std::string_view fragment) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : fragment) h = (h ^ c) * 0x100000001B3ULL;
    return splitmix64(seed ^ h);
}

std::vector<CheckResult> verify_catalog_entries(const std::vector<CatalogEntry>& catalog) {
    std::vector<CheckResult> out;
    for (const auto& e : catalog) {
        const LieAlgebra& g = e.algebra;
        run(out, e.id + "/jacobi", [&] {
            const auto d = jacobi_defect(g);
            if (d.magnitude == 0) return pass("0");
            return fail("Jacobi defect at " + triple_labels(g, *d.witness), rational_to_string(d.magnitude), d.witness);
        });
        for (const auto& exp : e.expected) run(out, e.id + "/" + exp.property, [&] { return check_expected(e, exp); });

        if (e.form) {
            const QuadraticForm& q = *e.form;
            run(out, e.id + "/form_nondegenerate",
                [&] { return verdict(q.nondegenerate(), "det " + q.determinant().to_string()); });
            std::optional<ConnectionTable> conn;
            std::optional<CurvatureTensor> r;
            auto need_conn = [&]() -> const ConnectionTable& {
                if (!conn) conn = levi_civita(g, q);
                return *conn;
            };
            auto need_r = [&]() -> const CurvatureTensor& {
                if (!r) r = curvature(g, need_conn());
                return *r;
            };
            run(out, e.id + "/torsion_free", [&] { return triple_check(g, torsion_violation(g, need_conn()), "torsion"); });
            run(out, e.id + "/metric_compatible",
                [&] { return triple_check(g, metric_violation(q, need_conn()), "metric compatibility"); });
            run(out, e.id + "/curvature_antisymmetric",
                [&] { return triple_check(g, antisymmetry_violation(need_r()), "antisymmetry"); });
            run(out, e.id + "/first_bianchi", [&] { return triple_check(g, bianchi_violation(need_r()), "first Bianchi"); });
            run(out, e.id + "/curvature_skew", [&] { return triple_check(g, skew_violation(q, need_r()), "skew symmetry"); });
        }
        if (e.model) {
            const auto& m = *e.model;
            run(out, e.id + "/isotropy_closed", [&] { return verdict(is_subalgebra(m.algebra(), m.isotropy()), "closed"); });
            run(out, e.id + "/quotient_form_nondegenerate", [&] {
                if (!m.form()) return fail("no quotient form", "missing");
                return verdict(m.form()->nondegenerate(), "det " + m.form()->determinant().to_string());
            });
        }
    }
    return out;
}

std::vector<CheckResult> verify_flat_classes(const std::vector<CatalogEntry>& catalog) {
    std::vector<CheckResult> out;
    const char* ids[] = {"flat_c3", "heis3", "sol3", "sl2"};
    std::vector<std::pair<bool, bool>> flat_solvable;
    for (const char* id : ids) {
        run(out, std::string("flat_classes/") + id, [&] {
            const auto& e = find_entry(catalog, id);
            if (!e.form) return fail("entry has no metric", "missing");
            const auto v = constant_curvature(e.algebra, *e.form);
            const bool solvable = is_solvable(e.algebra);
            const bool flat = v.constant && v.k.is_zero();
            flat_solvable.emplace_back(flat, solvable);
            const std::string value = v.to_string() + (solvable ? ", solvable" : ", not solvable");
            if (!v.constant) return fail("curvature not constant at " + triple_labels(e.algebra, *v.witness), value, v.witness);
            return verdict(flat == solvable, value, "flatness disagrees with solvability: " + value);
        });
    }
    run(out, "flat_classes/flat_iff_solvable", [&] {
        const bool ok = flat_solvable.size() == 4 &&
                        std::all_of(flat_solvable.begin(), flat_solvable.end(), [](auto p) { return p.first == p.second; });
        return verdict(ok, std::to_string(flat_solvable.size()) + " classes checked");
    });
    return out;
}

std::vector<CheckResult> verify_sl2_sectional(const std::vector<CatalogEntry>& catalog) {
    std::vector<CheckResult> out;
    const CatalogEntry* entry = nullptr;
    run(out, "sl2_sectional/killing_metric", [&] {
        entry = &find_entry(catalog, "sl2");
        if (!entry->form) return fail("sl2 entry has no metric", "missing");
        return verdict(*entry->form == killing_form(entry->algebra), "Killing");
    });
    if (!entry || !entry->form) return out;
    const auto& q = *entry->form;
    const auto r = curvature(entry->algebra, levi_civita(entry->algebra, q));
    // Planes in (H, E, F) coordinates.
    const std::vector<std::pair<std::string, std::pair<Vector, Vector>>> planes = {
        {"E^F", {{0, 1, 0}, {0, 0, 1}}},
        {"H^(E+F)", {{1, 0, 0}, {0, 1, 1}}},
        {"(H+E)^F", {{1, 1, 0}, {0, 0, 1}}},
        {"H^(E-F)", {{1, 0, 0}, {0, 1, -1}}},
    };
    std::vector<std::vector<Vector>> accepted;
    const GaussianRational target = GaussianRational::fraction(-1, 8);
    for (const auto& [name, plane] : planes) {
        run(out, "sl2_sectional/" + name, [&] {
            const auto k = sectional_curvature(q, r, plane.first, plane.second);
            if (!k) return fail("degenerate plane", "degenerate");
            if (*k == target) accepted.push_back({plane.first, plane.second});
            return verdict(*k == target, k->to_string(), "expected -1/8, got " + k->to_string());
        });
    }
    run(out, "sl2_sectional/distinct_planes", [&] {
        std::size_t distinct = 0;
        for (std::size_t a = 0; a < accepted.size(); ++a) {
            bool fresh = true;
            for (std::size_t b = 0; b < a; ++b) {
                auto both = accepted[a];
                both.insert(both.end(), accepted[b].begin(), accepted[b].end());
                if (span_basis(both, 3).size() == 2) fresh = false;
            }
            distinct += fresh;
        }
        return verdict(distinct >= 3, std::to_string(distinct) + " planes");
    });
    return out;
}

std::vector<CheckResult> verify_classification_robustness(const std::vector<CatalogEntry>& catalog, std::uint64_t seed,
                                                          std::size_t conjugations) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    for (const char* id : {"flat_c3", "heis3", "sol3", "sl2"}) {
        run(out, std::string("classification/") + id, [&] {
            const auto& e = find_entry(catalog, id);
            const std::string* want = e.expected_value("class");
            if (!want) return fail("entry has no expected class", "missing");
            const AlgebraClass base = classify_3d_unimodular(e.algebra);
            if (to_string(base) != *want) return fail("expected " + *want + ", got " + to_string(base), to_string(base));
            for (std::size_t t = 0; t < conjugations; ++t) {
                const CMatrix p = random_invertible(rng, 3);
                const AlgebraClass c = classify_3d_unimodular(change_basis(e.algebra, p));
                if (c != base)
                    return fail("conjugation " + std::to_string(t) + " by " + p.to_string() + " gives " + to_string(c),
                                to_string(c));
            }
            return pass(to_string(base) + " under " + std::to_string(conjugations) + " conjugations");
        });
    }
    return out;
}

std::vector<CheckResult> verify_solvable_models(std::uint64_t seed, std::size_t family_points) {
    std::vector<CheckResult> out;
    const std::size_t center_dims[] = {1, 1, 0};
    for (int c = 1; c <= 3; ++c) {
        const auto sc = static_cast<SolvableCase>(c);
        const std::string p = "solvable_case" + std::to_string(c) + "/";
        run(out, p + "jacobi", [&] {
            const LieAlgebra g = solvable_model_algebra(sc);
            const auto d = jacobi_defect(g);
            return d.magnitude == 0 ? pass("0")
                                    : fail("Jacobi defect at " + triple_labels(g, *d.witness), rational_to_string(d.magnitude), d.witness);
        });
        run(out, p + "center_dim", [&] {
            const std::size_t dim = center(solvable_model_algebra(sc)).size();
            return verdict(dim == center_dims[c - 1], std::to_string(dim));
        });
        run(out, p + "isotropy_type", [&] {
            const auto t = isotropy_type(solvable_model(sc));
            return verdict(t == IsotropyType::SEMISIMPLE, to_string(t));
        });
        run(out, p + "weights", [&] {
            const auto w = isotropy_weights(solvable_model(sc));
            if (!w) return fail("induced action is not diagonal", "non-diagonal");
            const std::string value = (*w)[0].to_string() + "," + (*w)[1].to_string() + "," + (*w)[2].to_string();
            return verdict(value == "0,1,-1", value);
        });
    }
    const std::size_t n = 4;
    run(out, "solvable_case1/x_prime_central", [&] {
        return verdict(in_span(center(solvable_model_algebra(SolvableCase::C_TIMES_SOL)), unit_vector(n, 0)), "X' central");
    });
    run(out, "solvable_case1/yzt_is_sol", [&] {
        const LieAlgebra g = solvable_model_algebra(SolvableCase::C_TIMES_SOL);
        const std::vector<Vector> span = {unit_vector(n, 1), unit_vector(n, 2), unit_vector(n, 3)};
        if (!is_subalgebra(g, span)) return fail("(Y,Z,T) not closed", "not closed");
        const auto c = classify_3d_unimodular(restrict_to(g, span, {"Y", "Z", "T"}));
        return verdict(c == AlgebraClass::SOL, to_string(c));
    });
    run(out, "solvable_case2/heis_ideal", [&] {
        const LieAlgebra g = solvable_model_algebra(SolvableCase::C_SEMIDIRECT_HEIS);
        const std::vector<Vector> span = {unit_vector(n, 0), unit_vector(n, 2), unit_vector(n, 3)};
        std::vector<Vector> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
        for (const auto& v : bracket_span(g, all, span))
            if (!in_span(span, v)) return fail("(X',Z,T) is not an ideal", "not an ideal");
        const auto c = classify_3d_unimodular(restrict_to(g, span, {"X'", "Z", "T"}));
        return verdict(c == AlgebraClass::HEIS, to_string(c));
    });
    run(out, "solvable_case2/x_prime_central", [&] {
        return verdict(in_span(center(solvable_model_algebra(SolvableCase::C_SEMIDIRECT_HEIS)), unit_vector(n, 0)),
                       "X' central");
    });

    run(out, "param_family/zero_point_ad_t", [&] {
        const LieAlgebra g = build_param_extension({0, 0, 0, 0});
        // ad(T) on (X', Z, Y)
        const std::size_t order[] = {0, 2, 1};
        CMatrix a(3, 3);
        for (std::size_t col = 0; col < 3; ++col) {
            const Vector img = g.bracket_basis(3, order[col]);
            for (std::size_t row = 0; row < 3; ++row) a(row, col) = img[order[row]];
        }
        const CMatrix want{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
        return verdict(a == want && jacobi_defect(g).magnitude == 0, a.to_string());
    });
    run(out, "param_family/random_points", [&] {
        std::mt19937_64 rng(seed);
        for (std::size_t t = 0; t < family_points; ++t) {
            const ParamExtension p{random_gaussian(rng), random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)};
            const std::string at = "c=" + p.c.to_string() + " m=" + p.m.to_string() + " k=" + p.k.to_string() +
                                   " beta=" + p.beta.to_string();
            const HomogeneousModel m = param_extension_model(p);
            const auto d = jacobi_defect(m.algebra());
            if (d.magnitude != 0)
                return fail("Jacobi defect at " + triple_labels(m.algebra(), *d.witness) + " for " + at, "defect", d.witness);
            if (isotropy_type(m) != IsotropyType::UNIPOTENT)
                return fail("isotropy " + to_string(isotropy_type(m)) + " for " + at, "not unipotent");
            if (!check_invariance(m)) return fail("form not invariant for " + at, "not invariant");
        }
        return pass(std::to_string(family_points) + " points: Jacobi, UNIPOTENT, invariant");
    });
    run(out, "param_family/corruption_detected", [&] {
        LieAlgebra g = build_param_extension({1, 1, -1, 1});
        Vector tx = g.bracket_basis(3, 0);
        tx[2] += 1;  // [T, X'] = cX' + Z
        g.set_bracket(3, 0, tx);
        const auto d = jacobi_defect(g);
        if (d.magnitude == 0) return fail("corrupted table passes Jacobi", "0");
        return pass("defect " + rational_to_string(d.magnitude) + " at " + triple_labels(g, *d.witness));
    });

    const std::pair<const char*, GaussianRational> betas[] = {
        {"0", 0}, {"1", 1}, {"i", GaussianRational::i()}, {"3/2", GaussianRational::fraction(3, 2)}};
    for (const auto& [name, b] : betas) {
        run(out, std::string("heis_subalgebra/beta=") + name, [&] {
            const ParamExtension p{0, 1, -(b * b), b};
            return verdict(check_prop_iv(p), "span{X', Z - beta Y, T}");
        });
    }
    return out;
}

std::vector<CheckResult> verify_isotropy_dimension_bounds() {
    std::vector<CheckResult> out;
    const QuadraticForm q(CMatrix::identity(3));
    run(out, "isotropy_bounds/so3_dim", [&] {
        const auto d = skew_algebra(q).size();
        return verdict(d == 3, std::to_string(d));
    });
    run(out, "isotropy_bounds/stabilizer_norm_one", [&] {
        const auto d = stabilizer_in_skew(q, {{1, 0, 0}}).size();
        return verdict(d == 1, std::to_string(d));
    });
    run(out, "isotropy_bounds/stabilizer_norm_zero", [&] {
        const Vector v = {1, GaussianRational::i(), 0};
        if (!q.norm(v).is_zero()) return fail("vector is not isotropic", q.norm(v).to_string());
        const auto d = stabilizer_in_skew(q, {v}).size();
        return verdict(d == 1, std::to_string(d));
    });
    run(out, "isotropy_bounds/stabilizer_plane", [&] {
        const Vector u = {1, 0, 0}, v = {0, 1, 0};
        const QuadraticForm plane(CMatrix{{q.apply(u, u), q.apply(u, v)}, {q.apply(v, u), q.apply(v, v)}});
        if (!plane.nondegenerate()) return fail("plane is degenerate", "degenerate");
        const auto d = stabilizer_in_skew(q, {u, v}).size();
        return verdict(d == 0, std::to_string(d));
    });
    return out;
}

std::vector<CheckResult> verify_polynomial_identities() {
    std::vector<CheckResult> out;
    const PolyMatrix l = unipotent_isotropy_matrix(CPoly::x());
    const CMatrix q = unipotent_adapted_gram();
    const CMatrix n = l.derivative().evaluate(0);
    run(out, "unipotent_group/preserves_form", [&] {
        const PolyMatrix defect = l.transpose() * PolyMatrix(q) * l - PolyMatrix(q);
        return verdict(defect.is_zero(), defect.is_zero() ? "0" : defect.to_string());
    });
    run(out, "unipotent_group/generator_skew", [&] {
        const CMatrix s = n.transpose() * q + q * n;
        return verdict(s.is_zero(), s.is_zero() ? "0" : s.to_string());
    });
    run(out, "unipotent_group/generator_matches_family", [&] {
        const CMatrix a = induced_ad(param_extension_model({1, 1, -1, 1}), unit_vector(4, 1));
        return verdict(a == n, a.to_string());
    });
    run(out, "adapted_basis/norm_one", [&] {
        const QuadraticForm id(CMatrix::identity(3));
        const auto b = build_adapted_basis(id, {1, 0, 0}, RootMode::ExactOnly);
        const double res = adapted_basis_residual(id, b);
        return verdict(b.exact && res == 0.0 && b.kind == AdaptedKind::SEMISIMPLE, fmt_double(res));
    });
    run(out, "adapted_basis/norm_zero", [&] {
        const QuadraticForm id(CMatrix::identity(3));
        const auto b = build_adapted_basis(id, {1, GaussianRational::i(), 0}, RootMode::ExactOnly);
        const double res = adapted_basis_residual(id, b);
        return verdict(b.exact && res == 0.0 && b.kind == AdaptedKind::UNIPOTENT, fmt_double(res));
    });
    return out;
}

std::vector<CheckResult> verify_mobius(std::uint64_t seed, std::size_t samples, double tol) {
    std::vector<CheckResult> out;
    run(out, "mobius/random_samples", [&] {
        const auto r = mobius_invariance_check(samples, seed, tol);
        return verdict(r.passed, fmt_double(r.max_residual), "max residual " + fmt_double(r.max_residual));
    });
    const std::pair<Complex, Complex> points[] = {{{0.3, -1.2}, {2.0, 0.5}}, {{-1.0, 0.0}, {1.0, 0.0}}, {{0.0, 1.0}, {0.0, -0.25}}};
    auto exact_case = [&](const char* id, const Mobius& m) {
        run(out, id, [&] {
            double worst = 0.0;
            for (const auto& [z1, z2] : points) worst = std::max(worst, mobius_residual(m, z1, z2));
            return verdict(worst <= 1e-15, fmt_double(worst));
        });
    };
    exact_case("mobius/identity", Mobius{});
    exact_case("mobius/translation", Mobius{1.0, 1.0, 0.0, 1.0});
    return out;
}

VerifyReport verify_all(const std::vector<CatalogEntry>& catalog, const VerifyOptions& options) {
    if (catalog.empty()) throw Error(ErrorKind::EmptyCatalog, "verify_all: the catalog is empty");
    VerifyReport report;
    report.seed = options.seed;
    {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        report.timestamp = buf;
    }
    auto append = [&](std::vector<CheckResult> part) {
        report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    append(verify_catalog_entries(catalog));
    append(verify_flat_classes(catalog));
    append(verify_sl2_sectional(catalog));
    append(verify_classification_robustness(catalog, fragment_seed(options.seed, "classification"), options.conjugations));
    append(verify_solvable_models(fragment_seed(options.seed, "param_family"), options.family_points));
    append(verify_isotropy_dimension_bounds());
    append(verify_polynomial_identities());
    append(verify_mobius(fragment_seed(options.seed, "mobius"), options.mobius_samples, options.tol));
    return report;
}

VerifyReport verify_all(const VerifyOptions& options) { return verify_all(build_catalog(), options); }

std::string report_to_text(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.value;
        if (!c.passed) out << "  [" << c.witness << "]";
        out << "\n";
    }
    out << "seed " << report.seed << ", " << report.timestamp << ": " << report.pass_count() << " passed, "
        << report.fail_count() << " failed\n";
    return out.str();
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json item;
        item["id"] = c.id;
        item["status"] = c.passed ? "pass" : "fail";
        item["witness"] = c.witness;
        item["value"] = c.value;
        if (c.triple) item["triple"] = triple_indices(*c.triple);
        j["checks"].push_back(std::move(item));
    }
    j["summary"] = {{"pass", report.pass_count()}, {"fail", report.fail_count()}};
    return j.dump(2) + "\n";
}

}  // namespace liegeom
