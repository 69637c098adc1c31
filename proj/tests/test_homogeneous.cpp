#include <doctest.h>

#include <functional>

#include "liegeom/catalog.hpp"
#include "liegeom/error.hpp"
#include "liegeom/homogeneous.hpp"
#include "liegeom/linalg.hpp"
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

const ParamExtension kExtension{1, 1, -1, 1};

/// (Y, A, B, C) with [Y,A] = A, [Y,B] = A + B; isotropy Y.
HomogeneousModel mixed_model() {
    LieAlgebra g({"Y", "A", "B", "C"});
    g.set_bracket("Y", "A", Vector{0, 1, 0, 0});
    g.set_bracket("Y", "B", Vector{0, 1, 1, 0});
    return HomogeneousModel(g, {unit_vector(4, 0)}, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)},
                            {"A", "B", "C"});
}

/// c_plus_sl2 with isotropy C.
HomogeneousModel central_isotropy_model() {
    return HomogeneousModel(c_plus_sl2(), {unit_vector(4, 0)}, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)},
                            {"H", "E", "F"});
}

HomogeneousModel catalog_model(const std::string& id) {
    const auto cat = build_catalog();
    return *find_entry(cat, id).model;
}

}  // namespace

TEST_CASE("construction") {
    const LieAlgebra g = c_plus_sl2();
    CHECK(kind_of([&] {
              HomogeneousModel(g, {}, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3), unit_vector(4, 0)},
                               {"H", "E", "F", "C"});
          }) == ErrorKind::WrongDimension);
    CHECK(kind_of([&] {
              HomogeneousModel(g, {unit_vector(4, 0)}, {unit_vector(4, 1), unit_vector(4, 2), Vector{0, 1, 1, 0}},
                               {"H", "E", "X"});
          }) == ErrorKind::DependentVectors);

    LieAlgebra big({"H", "E", "F", "P", "Q"});
    big.set_bracket("H", "E", Vector{0, 2, 0, 0, 0});
    big.set_bracket("H", "F", Vector{0, 0, -2, 0, 0});
    big.set_bracket("E", "F", Vector{1, 0, 0, 0, 0});
    CHECK(kind_of([&] {
              HomogeneousModel(big, {unit_vector(5, 1), unit_vector(5, 2)},
                               {unit_vector(5, 0), unit_vector(5, 3), unit_vector(5, 4)}, {"H", "P", "Q"});
          }) == ErrorKind::NotSubalgebraInvariant);
    CHECK(kind_of([&] {
              HomogeneousModel(g, {unit_vector(4, 0)}, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)},
                               {"H", "E", "F"}, QuadraticForm(CMatrix::identity(2)));
          }) == ErrorKind::ShapeMismatch);

    const auto m = central_isotropy_model();
    const auto [iso, comp] = m.split(Vector{5, 1, 2, 3});
    CHECK(iso == Vector{5});
    CHECK(comp == Vector{1, 2, 3});
    CHECK(m.quotient_dim() == 3);
}

TEST_CASE("induced isotropy action") {
    CHECK(induced_ad(solvable_model(SolvableCase::C_TIMES_SOL), unit_vector(4, 1)) ==
          CMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    CHECK(induced_ad(param_extension_model(kExtension), unit_vector(4, 1)) == testing::unipotent_generator());
    CHECK(induced_ad(mixed_model(), unit_vector(4, 0)) == CMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}});
    CHECK(induced_ad(central_isotropy_model(), unit_vector(4, 0)).is_zero());
    CHECK(kind_of([] { induced_ad(solvable_model(SolvableCase::C_TIMES_SOL), unit_vector(4, 2)); }) ==
          ErrorKind::PreconditionViolated);
}

TEST_CASE("isotropy type") {
    CHECK(isotropy_type(solvable_model(SolvableCase::C_TIMES_SOL)) == IsotropyType::SEMISIMPLE);
    CHECK(isotropy_type(solvable_model(SolvableCase::C_SEMIDIRECT_HEIS)) == IsotropyType::SEMISIMPLE);
    CHECK(isotropy_type(solvable_model(SolvableCase::C2_SEMIDIRECT_C2)) == IsotropyType::SEMISIMPLE);
    CHECK(isotropy_type(param_extension_model(kExtension)) == IsotropyType::UNIPOTENT);
    CHECK(isotropy_type(mixed_model()) == IsotropyType::MIXED);
    CHECK(isotropy_type(central_isotropy_model()) == IsotropyType::UNIPOTENT);
    CHECK(isotropy_type(catalog_model("sl2_diag_isotropy")) == IsotropyType::SEMISIMPLE);
    CHECK(to_string(IsotropyType::MIXED) == "MIXED");

    const HomogeneousModel none(heis3(), {}, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}, {"X'", "Y", "Z"});
    CHECK(kind_of([&] { isotropy_type(none); }) == ErrorKind::WrongIsotropyDimension);
}

TEST_CASE("isotropy type does not depend on the isotropy generator scale") {
    Rng rng(30);
    for (int t = 0; t < 20; ++t) {
        const GaussianRational s = testing::nonzero_gaussian(rng);
        for (auto c : {SolvableCase::C_TIMES_SOL, SolvableCase::C_SEMIDIRECT_HEIS}) {
            const auto base = solvable_model(c);
            const HomogeneousModel m(base.algebra(), {scale(s, base.isotropy()[0])}, base.complement(),
                                     base.complement_names(), base.form());
            CHECK(isotropy_type(m) == IsotropyType::SEMISIMPLE);
            CHECK(check_invariance(m));
        }
        const auto p = param_extension_model(kExtension);
        const HomogeneousModel m(p.algebra(), {scale(s, p.isotropy()[0])}, p.complement(), p.complement_names(),
                                 p.form());
        CHECK(isotropy_type(m) == IsotropyType::UNIPOTENT);
    }
}

TEST_CASE("invariant forms") {
    const HomogeneousModel none(heis3(), {}, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}, {"X'", "Y", "Z"});
    CHECK(invariant_forms(none).size() == 6);
    CHECK(invariant_forms(solvable_model(SolvableCase::C_TIMES_SOL)).size() == 2);
    CHECK(invariant_forms(param_extension_model(kExtension)).size() == 2);
    CHECK(invariant_forms(mixed_model()).size() == 1);
    CHECK(invariant_forms(catalog_model("sl2_diag_isotropy")).size() == 2);

    for (const auto& m : {solvable_model(SolvableCase::C_TIMES_SOL), param_extension_model(kExtension), mixed_model()}) {
        for (const auto& s : invariant_forms(m)) {
            CHECK(s == s.transpose());
            CHECK(check_invariance(m.with_form(QuadraticForm(s))));
        }
    }
}

TEST_CASE("invariance check") {
    CHECK(check_invariance(solvable_model(SolvableCase::C_TIMES_SOL)));
    CHECK(check_invariance(param_extension_model(kExtension)));
    CHECK_FALSE(check_invariance(solvable_model(SolvableCase::C_TIMES_SOL).with_form(QuadraticForm(CMatrix::identity(3)))));
    CHECK(kind_of([] { check_invariance(mixed_model()); }) == ErrorKind::MissingForm);

    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const GaussianRational s = testing::nonzero_gaussian(rng);
        const auto m = solvable_model(SolvableCase::C_TIMES_SOL);
        CHECK(check_invariance(m.with_form(QuadraticForm(s * m.form()->gram()))));
    }
}

TEST_CASE("stabilizer subalgebras") {
    const auto all = subalgebra_stabilizing(central_isotropy_model(), {unit_vector(4, 0)});
    CHECK(all.basis.size() == 4);
    CHECK(all.bracket_closed);

    const auto m = solvable_model(SolvableCase::C_TIMES_SOL);
    const auto st = subalgebra_stabilizing(m, {unit_vector(4, 1), unit_vector(4, 2)});
    CHECK(st.basis.size() == 3);
    CHECK(st.bracket_closed);
    CHECK(in_span(st.basis, unit_vector(4, 0)));
    CHECK_FALSE(in_span(st.basis, unit_vector(4, 3)));

    CHECK(kind_of([&] { subalgebra_stabilizing(m, {unit_vector(4, 2)}); }) == ErrorKind::PreconditionViolated);

    const auto heis_model = solvable_model(SolvableCase::C_SEMIDIRECT_HEIS);
    const std::vector<Vector> w{unit_vector(4, 1), unit_vector(4, 0), unit_vector(4, 2)};
    const auto h = subalgebra_stabilizing(heis_model, w);
    CHECK(h.basis.size() == 3);
    CHECK(h.bracket_closed);
    for (const auto& v : w) CHECK(in_span(h.basis, v));

    // contains the centralizer of W
    for (const auto& model : {m, heis_model}) {
        std::vector<std::vector<Vector>> subspaces = {w, {unit_vector(4, 1)}, {unit_vector(4, 1), unit_vector(4, 3)}};
        for (const auto& sub : subspaces) {
            const auto st = subalgebra_stabilizing(model, sub);
            CHECK(st.bracket_closed);
            const LieAlgebra& g = model.algebra();
            for (std::size_t a = 0; a < 4; ++a) {
                bool central = true;
                for (const auto& v : sub) central = central && is_zero(bracket(g, unit_vector(4, a), v));
                if (central) CHECK(in_span(st.basis, unit_vector(4, a)));
            }
        }
    }
}

TEST_CASE("induced action on the central block of the extension") {
    const CMatrix a = induced_ad(param_extension_model(kExtension), unit_vector(4, 1));
    const CMatrix block{{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}};
    CHECK(block == CMatrix{{0, 1}, {0, 0}});
}

TEST_CASE("center check for semisimple isotropy") {
    CHECK(center_check_semisimple_isotropy(solvable_model(SolvableCase::C_TIMES_SOL)));
    CHECK(center_check_semisimple_isotropy(solvable_model(SolvableCase::C_SEMIDIRECT_HEIS)));
    CHECK_FALSE(center_check_semisimple_isotropy(solvable_model(SolvableCase::C2_SEMIDIRECT_C2)));
    CHECK(center_check_semisimple_isotropy(catalog_model("sl2_diag_isotropy")));
    CHECK(kind_of([] { center_check_semisimple_isotropy(param_extension_model(kExtension)); }) ==
          ErrorKind::WrongIsotropyType);
}

TEST_CASE("isotropy weights") {
    CHECK(isotropy_weights(solvable_model(SolvableCase::C_TIMES_SOL)) == Vector{0, 1, -1});
    CHECK(isotropy_weights(catalog_model("sl2_diag_isotropy")) == Vector{0, 2, -2});
    CHECK_FALSE(isotropy_weights(param_extension_model(kExtension)).has_value());
}
