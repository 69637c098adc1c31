#include "liegeom_cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "liegeom/catalog.hpp"
#include "liegeom/connection.hpp"
#include "liegeom/error.hpp"
#include "liegeom/homogeneous.hpp"
#include "liegeom/mobius.hpp"
#include "liegeom/spec_file.hpp"
#include "liegeom/verify.hpp"

namespace liegeom::cli {

namespace {

using json = nlohmann::ordered_json;

struct Context {
    bool json_output = false;
    bool quiet = false;
    std::ostream& out;
    std::ostream& err;

    void emit(const std::string& text, const json& j) const {
        if (quiet) return;
        if (json_output)
            out << j.dump(2) << "\n";
        else
            out << text;
    }
};

std::string labels(const LieAlgebra& g, const Triple& t) {
    const auto& n = g.basis_names();
    return "(" + n[t[0]] + "," + n[t[1]] + "," + n[t[2]] + ")";
}

CatalogEntry load(const std::string& path) { return to_catalog_entry(read_spec_file(path)); }

int cmd_validate(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    const auto d = jacobi_defect(e.algebra);
    const bool jacobi_ok = d.magnitude == 0;
    std::optional<QuadraticForm> q = e.model ? e.model->form() : e.form;
    std::ostringstream text;
    json j;
    j["file"] = path;
    j["jacobi"] = {{"defect", rational_to_string(d.magnitude)}, {"witness", d.witness ? labels(e.algebra, *d.witness) : ""}};
    text << "jacobi: " << (jacobi_ok ? "ok" : "defect " + rational_to_string(d.magnitude) + " at " + labels(e.algebra, *d.witness))
         << "\n";
    bool form_ok = true;
    if (q) {
        form_ok = q->nondegenerate();
        text << "form: " << (form_ok ? "nondegenerate" : "degenerate") << " (det " << q->determinant() << ")\n";
        j["form"] = {{"nondegenerate", form_ok}, {"determinant", q->determinant().to_string()}};
    } else {
        text << "form: none\n";
        j["form"] = nullptr;
    }
    const bool ok = jacobi_ok && form_ok;
    text << (ok ? "valid" : "invalid") << "\n";
    j["valid"] = ok;
    ctx.emit(text.str(), j);
    return ok ? 0 : 1;
}

int cmd_invariants(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    json j;
    std::ostringstream text;
    for (const char* key : {"unimodular", "solvable", "nilpotent", "semisimple", "center_dim", "derived_dims",
                            "lower_central_dims"}) {
        const std::string v = evaluate_property(e, key);
        text << key << ": " << v << "\n";
        j[key] = v;
    }
    ctx.emit(text.str(), j);
    return 0;
}

int cmd_classify(const Context& ctx, const std::string& path) {
    const std::string tag = to_string(classify_3d_unimodular(load(path).algebra));
    ctx.emit(tag + "\n", json{{"class", tag}});
    return 0;
}

QuadraticForm require_form(const CatalogEntry& e) {
    if (!e.form) throw Error(ErrorKind::MissingForm, "the file has no [form] on the algebra");
    return *e.form;
}

int cmd_connection(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    const auto conn = levi_civita(e.algebra, require_form(e));
    const auto& names = e.algebra.basis_names();
    std::ostringstream text;
    json j = json::object();
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b) {
            const std::string key = "nabla_" + names[a] + " " + names[b];
            const std::string v = format_lincomb(conn.nabla_basis(a, b), names);
            text << key << " = " << v << "\n";
            j[key] = v;
        }
    ctx.emit(text.str(), j);
    return 0;
}

int cmd_curvature(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    const QuadraticForm q = require_form(e);
    const auto r = curvature(e.algebra, levi_civita(e.algebra, q));
    const auto& names = e.algebra.basis_names();
    std::ostringstream text;
    json comps = json::object();
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b)
            for (std::size_t c = 0; c < names.size(); ++c) {
                const Vector v = r.apply_basis(a, b, c);
                if (is_zero(v)) continue;
                const std::string key = "R(" + names[a] + "," + names[b] + ")" + names[c];
                text << key << " = " << format_lincomb(v, names) << "\n";
                comps[key] = format_lincomb(v, names);
            }
    if (comps.empty()) text << "R = 0\n";
    const QuadraticForm ric = ricci(r);
    text << "Ricci = " << ric.gram().to_string() << "\n";
    ctx.emit(text.str(), json{{"components", comps}, {"ricci", ric.gram().to_string()}});
    return 0;
}

int cmd_constcurv(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    const auto v = constant_curvature(e.algebra, require_form(e));
    std::string text = v.to_string();
    json j{{"verdict", v.to_string()}};
    if (v.witness) {
        text += " witness " + labels(e.algebra, *v.witness);
        j["witness"] = labels(e.algebra, *v.witness);
        j["candidate_k"] = v.k.to_string();
    }
    ctx.emit(text + "\n", j);
    return 0;
}

int cmd_model(const Context& ctx, const std::string& path) {
    const CatalogEntry e = load(path);
    if (!e.model) throw Error(ErrorKind::PreconditionViolated, "the file has no [isotropy] section");
    const auto& m = *e.model;
    std::ostringstream text;
    json j;
    const std::string type = m.isotropy().size() == 1 ? to_string(isotropy_type(m)) : std::string("n/a");
    text << "isotropy_type: " << type << "\n";
    j["isotropy_type"] = type;
    if (m.form()) {
        const bool inv = check_invariance(m);
        text << "invariance: " << (inv ? "true" : "false") << "\n";
        j["invariance"] = inv;
    } else {
        text << "invariance: no form\n";
        j["invariance"] = nullptr;
    }
    const auto forms = invariant_forms(m);
    text << "invariant_forms_dim: " << forms.size() << "\n";
    j["invariant_forms_dim"] = forms.size();
    ctx.emit(text.str(), j);
    return 0;
}

int cmd_verify(const Context& ctx, const VerifyOptions& opts) {
    const VerifyReport report = verify_all(opts);
    if (!ctx.quiet) ctx.out << (ctx.json_output ? report_to_json(report) : report_to_text(report));
    return report.all_passed() ? 0 : 1;
}

int cmd_mobius(const Context& ctx, std::size_t samples, std::uint64_t seed, double tol) {
    const auto r = mobius_invariance_check(samples, seed, tol);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
    std::ostringstream text;
    text << "max residual " << buf << " over " << r.samples << " samples (" << r.resampled << " resampled): "
         << (r.passed ? "pass" : "fail") << "\n";
    ctx.emit(text.str(), json{{"samples", r.samples},
                              {"resampled", r.resampled},
                              {"max_residual", buf},
                              {"tol", tol},
                              {"status", r.passed ? "pass" : "fail"}});
    return r.passed ? 0 : 1;
}

int cmd_export(const Context& ctx, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ostringstream text;
    json files = json::array();
    for (const auto& e : build_catalog()) {
        const auto path = std::filesystem::path(dir) / (e.id + ".liealg");
        std::ofstream f(path, std::ios::binary);
        f << serialize(from_catalog_entry(e));
        if (!f) throw Error(ErrorKind::PreconditionViolated, "cannot write " + path.string());
        text << path.string() << "\n";
        files.push_back(path.string());
    }
    ctx.emit(text.str(), json{{"files", files}});
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lie algebra and left-invariant geometry toolkit", "liegeom-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{false, false, out, err};
    app.add_flag("--json", ctx.json_output, "Machine-readable output");
    app.add_flag("--quiet", ctx.quiet, "Suppress output; report through the exit code only");

    std::string file;
    std::function<int()> action;
    auto file_command = [&](const char* name, const char* help, int (*fn)(const Context&, const std::string&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("FILE", file, ".liealg input")->required();
        sub->callback([&, fn] { action = [&, fn] { return fn(ctx, file); }; });
    };
    file_command("validate", "Jacobi identity and form nondegeneracy", cmd_validate);
    file_command("invariants", "Unimodularity, solvability, nilpotency, center, derived series", cmd_invariants);
    file_command("classify", "Class of a 3-dimensional unimodular algebra", cmd_classify);
    file_command("connection", "Levi-Civita connection table", cmd_connection);
    file_command("curvature", "Curvature tensor and Ricci form", cmd_curvature);
    file_command("constcurv", "Constant(k) or NotConstant with a witness triple", cmd_constcurv);
    file_command("model", "Isotropy type, invariance, invariant-form dimension", cmd_model);

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify-paper", "Full catalog verification suite");
    verify->add_option("--seed", vopts.seed, "Seed for randomized checks")->capture_default_str();
    verify->add_option("--tol", vopts.tol, "Tolerance for floating-point checks")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify->callback([&] { action = [&] { return cmd_verify(ctx, vopts); }; });

    std::size_t samples = 1000;
    std::uint64_t mseed = 42;
    double mtol = 1e-9;
    auto* mobius = app.add_subcommand("mobius-check", "Numeric Mobius invariance of dz1 dz2/(z1-z2)^2");
    mobius->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    mobius->add_option("--seed", mseed)->capture_default_str();
    mobius->add_option("--tol", mtol)->capture_default_str()->check(CLI::PositiveNumber);
    mobius->callback([&] { action = [&] { return cmd_mobius(ctx, samples, mseed, mtol); }; });

    std::string dir;
    auto* exp = app.add_subcommand("export-catalog", "Write the built-in catalog as .liealg files");
    exp->add_option("DIR", dir, "Output directory")->required();
    exp->callback([&] { action = [&] { return cmd_export(ctx, dir); }; });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << file << ":" << e.line() << ":" << e.column() << ": " << to_string(e.kind()) << ": " << e.reason() << "\n";
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return 1;
}

}  // namespace liegeom::cli
