#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "liegeom/catalog.hpp"
#include "liegeom/error.hpp"
#include "liegeom/mobius.hpp"
#include "liegeom/verify.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::Rng;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::PreconditionViolated;
}

VerifyOptions quick() {
    VerifyOptions o;
    o.conjugations = 20;
    o.mobius_samples = 100;
    o.family_points = 10;
    return o;
}

}  // namespace

TEST_CASE("catalog entries are well formed") {
    const auto cat = build_catalog();
    CHECK(cat.size() == 12);
    std::set<std::string> ids;
    for (const auto& e : cat) {
        CAPTURE(e.id);
        CHECK(ids.insert(e.id).second);
        CHECK(jacobi_defect(e.algebra).magnitude == 0);
        CHECK_FALSE(e.expected.empty());
        if (e.form) CHECK(e.form->nondegenerate());
        if (e.model && e.model->form()) CHECK(e.model->form()->nondegenerate());
        for (const auto& x : e.expected) {
            CHECK(std::find(known_properties().begin(), known_properties().end(), x.property) !=
                  known_properties().end());
            CHECK(evaluate_property(e, x.property) == x.value);
        }
    }
    CHECK(kind_of([&] { find_entry(cat, "nope"); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("property evaluation") {
    const auto cat = build_catalog();
    CHECK(evaluate_property(find_entry(cat, "heis3"), "derived_dims") == "3,1,0");
    CHECK(evaluate_property(find_entry(cat, "sol3"), "class") == "SOL");
    CHECK(evaluate_property(find_entry(cat, "c_times_sol"), "isotropy_type") == "SEMISIMPLE");
    CHECK(evaluate_property(find_entry(cat, "heis_extension"), "isotropy_type") == "UNIPOTENT");
    CHECK(kind_of([&] { evaluate_property(find_entry(cat, "c_times_sol"), "curvature"); }) == ErrorKind::MissingForm);
    CHECK_THROWS_AS(evaluate_property(find_entry(cat, "sol3"), "colour"), Error);
}

TEST_CASE("parametrized extension") {
    Rng rng(40);
    for (int t = 0; t < 40; ++t) {
        const ParamExtension p{testing::gaussian(rng), testing::gaussian(rng), testing::gaussian(rng),
                               testing::gaussian(rng)};
        CHECK(jacobi_defect(build_param_extension(p)).magnitude == 0);
        const auto m = param_extension_model(p);
        CHECK(isotropy_type(m) == IsotropyType::UNIPOTENT);
        CHECK(check_invariance(m));
    }
    const LieAlgebra zero = build_param_extension({0, 0, 0, 0});
    CHECK(ad(zero, unit_vector(4, 3)) == CMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
}

TEST_CASE("heis subalgebra of the extension") {
    for (const GaussianRational& beta : {GaussianRational(0), GaussianRational(1), GaussianRational::i(),
                                         GaussianRational::fraction(3, 2)}) {
        CHECK(check_prop_iv({0, 1, -beta * beta, beta}));
        CHECK_FALSE(check_prop_iv({0, 0, -beta * beta, beta}));
    }
    CHECK(kind_of([] { check_prop_iv({1, 1, -1, 1}); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([] { check_prop_iv({0, 1, 1, 1}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("Mobius invariance") {
    CHECK(mobius_residual(Mobius{}, {1, 2}, {-1, 0.5}) == 0.0);
    CHECK(mobius_residual(Mobius{1.0, {2.0, -1.0}, 0.0, 1.0}, {0.3, 0.1}, {-1, 2}) < 1e-14);
    const Mobius inversion{0.0, -1.0, 1.0, 0.0};
    CHECK(mobius_residual(inversion, {1, 1}, {2, -1}) < 1e-14);
    CHECK(kind_of([] { mobius_residual(Mobius{}, {1, 1}, {1, 1}); }) == ErrorKind::DegenerateSample);
    CHECK(kind_of([&] { mobius_residual(inversion, {0, 0}, {1, 0}); }) == ErrorKind::DegenerateSample);

    const auto r = mobius_invariance_check(500, 7, 1e-9);
    CHECK(r.passed);
    CHECK(r.samples == 500);
    CHECK(r.max_residual < 1e-9);
    const auto again = mobius_invariance_check(500, 7, 1e-9);
    CHECK(again.max_residual == r.max_residual);
}

TEST_CASE("verify_all") {
    CHECK(kind_of([] { verify_all(std::vector<CatalogEntry>{}, quick()); }) == ErrorKind::EmptyCatalog);

    const VerifyReport report = verify_all(build_catalog(), quick());
    for (const auto& c : report.checks) {
        CAPTURE(c.id);
        CHECK(c.passed);
        CHECK(c.witness.empty());
    }
    CHECK(report.all_passed());
    CHECK(report.find("sol3/jacobi") != nullptr);
    CHECK(report.find("nonexistent") == nullptr);
    CHECK(report_to_json(report) == report_to_json(verify_all(build_catalog(), quick())));
    CHECK(report_to_text(report).find("FAIL") == std::string::npos);
}

TEST_CASE("corrupted catalogs fail") {
    auto cat = build_catalog();
    for (auto& e : cat)
        if (e.id == "sl2")
            for (auto& x : e.expected)
                if (x.property == "curvature") x.value = "Constant(-1/4)";
    const auto report = verify_all(cat, quick());
    CHECK_FALSE(report.all_passed());
    const CheckResult* c = report.find("sl2/curvature");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(c->value == "Constant(-1/8)");
    CHECK_FALSE(c->witness.empty());

    auto broken = build_catalog();
    broken[2].algebra.set_bracket("Y", "Z", Vector{1, 1, 0});
    const auto checks = verify_catalog_entries(broken);
    bool jacobi_failed = false;
    for (const auto& r : checks)
        if (r.id == broken[2].id + "/jacobi") jacobi_failed = !r.passed && r.triple.has_value();
    CHECK(jacobi_failed);
}

TEST_CASE("fragment seeds") {
    CHECK(fragment_seed(42, "mobius") == fragment_seed(42, "mobius"));
    CHECK(fragment_seed(42, "mobius") != fragment_seed(43, "mobius"));
    CHECK(fragment_seed(42, "mobius") != fragment_seed(42, "classification"));
}
