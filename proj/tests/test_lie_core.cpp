#include <doctest.h>

#include <algorithm>
#include <functional>

#include "liegeom/catalog.hpp"
#include "liegeom/error.hpp"
#include "liegeom/lie_algebra.hpp"
#include "liegeom/quadratic_form.hpp"
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

LieAlgebra so3() {
    LieAlgebra g({"e1", "e2", "e3"});
    g.set_bracket(0, 1, Vector{0, 0, 1});
    g.set_bracket(1, 2, Vector{1, 0, 0});
    g.set_bracket(2, 0, Vector{0, 1, 0});
    return g;
}

/// Random 3-dimensional table; rarely a Lie algebra.
LieAlgebra random_table(Rng& rng) {
    LieAlgebra g({"a", "b", "c"});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) g.set_bracket(i, j, testing::random_vector(rng, 3, 2));
    return g;
}

}  // namespace

TEST_CASE("brackets") {
    const LieAlgebra h = heis3(), s = sol3();
    CHECK(bracket(h, unit_vector(3, 1), unit_vector(3, 2)) == unit_vector(3, 0));
    CHECK(bracket(s, unit_vector(3, 0), unit_vector(3, 2)) == Vector{0, 0, -1});
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
        const Vector x = testing::random_vector(rng, 3), y = testing::random_vector(rng, 3);
        CHECK(is_zero(bracket(sl2(), x, x)));
        CHECK(bracket(sl2(), x, y) == scale(-1, bracket(sl2(), y, x)));
    }
    CHECK_THROWS_AS(bracket(h, Vector{1, 0}, unit_vector(3, 0)), Error);
}

TEST_CASE("antisymmetry is enforced on construction") {
    LieAlgebra g({"A", "B"});
    g.set_bracket("A", "B", Vector{1, 0});
    CHECK(g.bracket_basis(1, 0) == Vector{-1, 0});
    CHECK_THROWS_AS(g.set_bracket(0, 0, Vector{1, 0}), Error);
    CHECK_THROWS_AS(g.set_bracket("A", "Q", Vector{1, 0}), Error);
    g.set_constant(0, 1, 1, 3);
    CHECK(g.constant(1, 0, 1) == GaussianRational(-3));
}

TEST_CASE("Jacobi defect") {
    CHECK(jacobi_defect(sl2()).magnitude == 0);
    CHECK(jacobi_defect(so3()).magnitude == 0);
    CHECK_FALSE(jacobi_defect(so3()).witness.has_value());

    LieAlgebra bad = heis3();
    bad.set_bracket("X'", "Z", Vector{0, 0, 1});  // [X', Z] = Z
    const auto d = jacobi_defect(bad);
    CHECK(d.magnitude == 1);
    REQUIRE(d.witness.has_value());
}

TEST_CASE("ad and the Killing form") {
    CHECK(ad(heis3(), unit_vector(3, 0)).is_zero());
    CHECK(ad(sol3(), unit_vector(3, 0)) == CMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    CHECK(ad(sl2(), Vector{0, 0, 0}).is_zero());

    const QuadraticForm b = killing_form(sl2());
    CHECK(b.gram() == CMatrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
    CHECK(killing_form(abelian_c3()).gram().is_zero());
    CHECK(killing_form(heis3()).gram().is_zero());
}

TEST_CASE("derived and lower central series") {
    CHECK(derived_series(heis3()) == std::vector<std::size_t>{3, 1, 0});
    CHECK(derived_series(sol3()) == std::vector<std::size_t>{3, 2, 0});
    CHECK(derived_series(sl2()) == std::vector<std::size_t>{3, 3});
    CHECK(derived_series(abelian_c3()) == std::vector<std::size_t>{3, 0});
    CHECK(lower_central_series(heis3()) == std::vector<std::size_t>{3, 1, 0});
    CHECK(lower_central_series(sol3()) == std::vector<std::size_t>{3, 2, 2});
    CHECK(dims_to_string({3, 1, 0}) == "3,1,0");
}

TEST_CASE("center") {
    const auto z = center(heis3());
    REQUIRE(z.size() == 1);
    CHECK(in_span(z, unit_vector(3, 0)));
    CHECK(center(solvable_model_algebra(SolvableCase::C2_SEMIDIRECT_C2)).empty());
    CHECK(center(abelian_c3()).size() == 3);
    CHECK(center(sl2()).empty());
    for (const auto& g : {heis3(), sol3(), c_plus_sl2(), solvable_model_algebra(SolvableCase::C_SEMIDIRECT_HEIS)})
        for (const auto& v : center(g)) CHECK(ad(g, v).is_zero());
}

TEST_CASE("structural predicates") {
    CHECK(is_unimodular(sol3()));
    CHECK(is_solvable(sol3()));
    CHECK_FALSE(is_nilpotent(sol3()));
    CHECK(is_nilpotent(heis3()));
    CHECK(is_semisimple(sl2()));
    CHECK_FALSE(is_solvable(sl2()));
    CHECK_FALSE(is_unimodular(solvable_model_algebra(SolvableCase::C2_SEMIDIRECT_C2)));
}

TEST_CASE("semisimple algebras are perfect") {
    for (const auto& g : {sl2(), so3(), abelian_c3(), heis3(), sol3()}) {
        if (!is_semisimple(g)) continue;
        const auto d = derived_series(g);
        CHECK(std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == g.dim(); }));
    }
}

TEST_CASE("subalgebras, restriction and change of basis") {
    const LieAlgebra g = solvable_model_algebra(SolvableCase::C_TIMES_SOL);
    const std::vector<Vector> yzt = {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)};
    CHECK(is_subalgebra(g, yzt));
    CHECK(restrict_to(g, yzt, {"Y", "Z", "T"}) == sol3());
    CHECK_FALSE(is_subalgebra(sl2(), {unit_vector(3, 1), unit_vector(3, 2)}));

    const CMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    const LieAlgebra s = change_basis(sol3(), swap);  // (Z, Y, T)
    CHECK(s.bracket_basis(1, 0) == Vector{1, 0, 0});
    CHECK_THROWS_AS(change_basis(sol3(), CMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), Error);
}

TEST_CASE("classification") {
    CHECK(classify_3d_unimodular(heis3()) == AlgebraClass::HEIS);
    CHECK(classify_3d_unimodular(sol3()) == AlgebraClass::SOL);
    CHECK(classify_3d_unimodular(sl2()) == AlgebraClass::SL2);
    CHECK(classify_3d_unimodular(so3()) == AlgebraClass::SL2);
    CHECK(classify_3d_unimodular(abelian_c3()) == AlgebraClass::ABELIAN_C3);

    CHECK(kind_of([] { classify_3d_unimodular(c_plus_sl2()); }) == ErrorKind::WrongDimension);
    LieAlgebra affine({"a", "b", "c"});
    affine.set_bracket(0, 1, Vector{0, 1, 0});
    CHECK(kind_of([&] { classify_3d_unimodular(affine); }) == ErrorKind::NotUnimodular);
    LieAlgebra bad = heis3();
    bad.set_bracket("X'", "Z", Vector{0, 0, 1});
    CHECK(kind_of([&] { classify_3d_unimodular(bad); }) == ErrorKind::NotLieAlgebra);

    CHECK(to_string(AlgebraClass::ABELIAN_C3) == "ABELIAN_C3");
    CHECK(algebra_class_from_string("SOL") == AlgebraClass::SOL);
    CHECK_FALSE(algebra_class_from_string("sol").has_value());
}

TEST_CASE("classification is invariant under change of basis") {
    Rng rng(11);
    for (const auto& g : {abelian_c3(), heis3(), sol3(), sl2()}) {
        const AlgebraClass base = classify_3d_unimodular(g);
        for (int t = 0; t < 40; ++t) {
            const LieAlgebra h = change_basis(g, testing::random_invertible(rng, 3));
            CHECK(jacobi_defect(h).magnitude == 0);
            CHECK(classify_3d_unimodular(h) == base);
        }
    }
}

TEST_CASE("change of basis round trip and Jacobi on random tables") {
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const LieAlgebra g = random_table(rng);
        const CMatrix p = testing::random_invertible(rng, 3);
        CHECK(change_basis(change_basis(g, p), *inverse(p)) == g);
        // Jacobi holds in one basis iff in every basis.
        CHECK((jacobi_defect(g).magnitude == 0) == (jacobi_defect(change_basis(g, p)).magnitude == 0));
    }
}
