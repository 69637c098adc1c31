#include <doctest.h>

#include <algorithm>
#include <functional>

#include "liegeom/catalog.hpp"
#include "liegeom/connection.hpp"
#include "liegeom/error.hpp"
#include "liegeom/orthogonal.hpp"
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

GaussianRational frac(long n, long d) { return GaussianRational::fraction(n, d); }

QuadraticForm form_of(const std::string& id) {
    const auto cat = build_catalog();
    return *find_entry(cat, id).form;
}

bool is_skew_for(const QuadraticForm& q, const CMatrix& a) {
    return (a.transpose() * q.gram() + q.gram() * a).is_zero();
}

}  // namespace

TEST_CASE("Levi-Civita tables") {
    // heis with q(Y,Y) = q(X',Z) = 1
    const auto h = levi_civita(heis3(), form_of("heis3"));
    CHECK(h.nabla_basis(2, 1) == Vector{-1, 0, 0});
    CHECK(h.nabla_basis(2, 2) == Vector{0, 1, 0});

    const auto s = levi_civita(sol3(), form_of("sol3"));
    CHECK(s.nabla_basis(0, 1) == Vector{0, 1, 0});
    CHECK(s.nabla_basis(0, 2) == Vector{0, 0, -1});

    // bi-invariant metric: nabla_x y = [x,y]/2
    const auto k = levi_civita(sl2(), killing_form(sl2()));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            CHECK(k.nabla_basis(a, b) == scale(frac(1, 2), sl2().bracket_basis(a, b)));

    CHECK(kind_of([] { levi_civita(sl2(), QuadraticForm(CMatrix::identity(4))); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("curvature of the Killing metric") {
    const LieAlgebra g = sl2();
    const auto r = curvature(g, levi_civita(g, killing_form(g)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(r.apply_basis(i, j, k) ==
                      scale(frac(-1, 4), bracket(g, g.bracket_basis(i, j), unit_vector(3, k))));
    CHECK(ricci(r).gram() == CMatrix{{-2, 0, 0}, {0, 0, -1}, {0, -1, 0}});
}

TEST_CASE("constant curvature verdicts") {
    struct Row {
        const char* id;
        const char* verdict;
    };
    for (const Row& row : {Row{"flat_c3", "Constant(0)"}, Row{"heis3", "Constant(0)"}, Row{"sol3", "Constant(0)"},
                           Row{"sl2", "Constant(-1/8)"}, Row{"sl2_left_invariant_a2_b1", "Constant(-1/2)"},
                           Row{"sl2_left_invariant_a1_b1", "NotConstant"}}) {
        const auto cat = build_catalog();
        const CatalogEntry& e = find_entry(cat, row.id);
        const auto v = constant_curvature(e.algebra, *e.form);
        CAPTURE(row.id);
        CHECK(v.to_string() == row.verdict);
        CHECK(v.constant == !v.witness.has_value());
    }

    const auto v = constant_curvature(sl2(), form_of("sl2_left_invariant_a1_b1"));
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == Triple{0, 1, 0});
    CHECK(v.k == frac(-5, 4));

    const auto id = constant_curvature(heis3(), QuadraticForm(CMatrix::identity(3)));
    CHECK(id.to_string() == "NotConstant");
    CHECK(id.witness.has_value());
}

TEST_CASE("heis metrics with isotropic center are flat") {
    Rng rng(20);
    for (int t = 0; t < 60; ++t) {
        const QuadraticForm q = testing::random_isotropic_center_form(rng);
        CHECK(curvature(heis3(), levi_civita(heis3(), q)).is_zero());
        CHECK(constant_curvature(heis3(), q).to_string() == "Constant(0)");
    }
}

TEST_CASE("heis with the identity metric") {
    const auto r = curvature(heis3(), levi_civita(heis3(), QuadraticForm(CMatrix::identity(3))));
    CHECK(r.apply_basis(0, 1, 0) == Vector{0, frac(-1, 4), 0});
    CHECK(r.apply_basis(1, 2, 1) == Vector{0, 0, frac(3, 4)});
    CHECK(r.apply_basis(1, 2, 2) == Vector{0, frac(-3, 4), 0});
}

TEST_CASE("connection and curvature identities on random metrics") {
    Rng rng(21);
    for (const LieAlgebra& g : {heis3(), sol3(), sl2(), c_plus_sl2(), solvable_model_algebra(SolvableCase::C2_SEMIDIRECT_C2)}) {
        for (int t = 0; t < 12; ++t) {
            const QuadraticForm q = testing::random_nondegenerate_form(rng, g.dim());
            const auto conn = levi_civita(g, q);
            const auto r = curvature(g, conn);
            CHECK_FALSE(torsion_violation(g, conn).has_value());
            CHECK_FALSE(metric_violation(q, conn).has_value());
            CHECK_FALSE(antisymmetry_violation(r).has_value());
            CHECK_FALSE(bianchi_violation(r).has_value());
            CHECK_FALSE(skew_violation(q, r).has_value());
            CHECK(ricci(r).gram() == ricci(r).gram().transpose());
            const Vector x = testing::random_vector(rng, g.dim());
            CHECK(divergence(conn, x) == -ad(g, x).trace());
        }
    }
}

TEST_CASE("constant curvature is consistent with sectional and Ricci curvature") {
    Rng rng(22);
    for (const char* id : {"sl2", "sl2_left_invariant_a2_b1", "heis3", "sol3"}) {
        const auto cat = build_catalog();
        const CatalogEntry& e = find_entry(cat, id);
        const QuadraticForm& q = *e.form;
        const auto r = curvature(e.algebra, levi_civita(e.algebra, q));
        const auto v = constant_curvature(q, r);
        REQUIRE(v.constant);
        CHECK(ricci(r).gram() == (GaussianRational(2) * v.k) * q.gram());
        for (int t = 0; t < 20; ++t) {
            const Vector x = testing::random_vector(rng, 3), y = testing::random_vector(rng, 3);
            if (!linearly_independent({x, y})) continue;
            if (const auto k = sectional_curvature(q, r, x, y)) CHECK(*k == v.k);
        }
    }
}

TEST_CASE("sectional curvature") {
    const QuadraticForm b = killing_form(sl2());
    const auto r = curvature(sl2(), levi_civita(sl2(), b));
    CHECK(sectional_curvature(b, r, unit_vector(3, 1), unit_vector(3, 2)) == frac(-1, 8));
    // span{H, E} is degenerate for the Killing form
    CHECK_FALSE(sectional_curvature(b, r, unit_vector(3, 0), unit_vector(3, 1)).has_value());
    CHECK(kind_of([&] { sectional_curvature(b, r, Vector{1, 2, 0}, Vector{2, 4, 0}); }) == ErrorKind::DependentVectors);
}

TEST_CASE("divergence") {
    LieAlgebra affine({"a", "b"});
    affine.set_bracket(0, 1, Vector{0, 1});
    const auto conn = levi_civita(affine, QuadraticForm(CMatrix::identity(2)));
    CHECK(conn.nabla_basis(1, 0) == Vector{0, -1});
    CHECK(divergence(conn, Vector{1, 0}) == GaussianRational(-1));
    CHECK(divergence(conn, Vector{0, 1}) == GaussianRational(0));
    CHECK(divergence(levi_civita(sol3(), form_of("sol3")), Vector{1, 0, 0}) == GaussianRational(0));
}

TEST_CASE("skew algebras and stabilizers") {
    Rng rng(23);
    for (std::size_t n : {2u, 3u, 4u}) {
        for (int t = 0; t < 10; ++t) {
            const QuadraticForm q = testing::random_nondegenerate_form(rng, n);
            const auto basis = skew_algebra(q);
            CHECK(basis.size() == n * (n - 1) / 2);
            for (const auto& a : basis) CHECK(is_skew_for(q, a));
        }
    }
    const QuadraticForm id(CMatrix::identity(3));
    CHECK(stabilizer_in_skew(id, {{1, 0, 0}}).size() == 1);
    const auto null_stab = stabilizer_in_skew(id, {{1, GaussianRational::i(), 0}});
    REQUIRE(null_stab.size() == 1);
    CHECK(is_nilpotent_matrix(null_stab[0]));
    CHECK(stabilizer_in_skew(id, {{1, 0, 0}, {0, 1, 0}}).empty());
    for (const auto& a : stabilizer_in_skew(id, {{1, 0, 0}})) CHECK(is_zero(a * Vector{1, 0, 0}));
}

TEST_CASE("isotropic lines") {
    const auto exact = isotropic_lines(QuadraticForm(CMatrix::identity(2)), RootMode::ExactOnly);
    REQUIRE(exact.exact());
    const auto& l = exact.exact_lines();
    const Vector plus{1, GaussianRational::i()}, minus{1, -GaussianRational::i()};
    CHECK(((l[0] == plus && l[1] == minus) || (l[0] == minus && l[1] == plus)));

    const auto hyperbolic = isotropic_lines(QuadraticForm(CMatrix{{0, 1}, {1, 0}}));
    REQUIRE(hyperbolic.exact());
    CHECK(hyperbolic.exact_lines()[0] == Vector{1, 0});
    CHECK(hyperbolic.exact_lines()[1] == Vector{0, 1});

    const QuadraticForm irr(CMatrix{{1, 0}, {0, 2}});
    CHECK(kind_of([&] { isotropic_lines(irr, RootMode::ExactOnly); }) == ErrorKind::NoExactRoot);
    const auto fl = isotropic_lines(irr);
    CHECK_FALSE(fl.exact());
    for (const auto& v : fl.float_lines()) {
        CHECK(approx_equal(v[0], CFloat(1.0)));
        CHECK(approx_equal(v[0] * v[0] + CFloat(2.0) * v[1] * v[1], CFloat(0.0)));
    }

    CHECK(kind_of([] { isotropic_lines(QuadraticForm(CMatrix{{1, 1}, {1, 1}})); }) == ErrorKind::DegenerateRestriction);
    const QuadraticForm id3(CMatrix::identity(3));
    const auto ambient = isotropic_lines(id3, Vector{0, 1, 0}, Vector{0, 0, 1});
    REQUIRE(ambient.exact());
    for (const auto& v : ambient.exact_lines()) CHECK(id3.norm(v).is_zero());
    CHECK(kind_of([&] { isotropic_lines(id3, Vector{0, 1, 0}, Vector{0, 2, 0}); }) == ErrorKind::DependentVectors);
}

TEST_CASE("adapted bases") {
    const QuadraticForm id(CMatrix::identity(3));
    const auto semi = build_adapted_basis(id, {1, 0, 0}, RootMode::ExactOnly);
    CHECK(semi.kind == AdaptedKind::SEMISIMPLE);
    CHECK(adapted_basis_residual(id, semi) == 0.0);
    CHECK(id.apply(semi.vectors[1], semi.vectors[2]) == GaussianRational(1));

    const auto uni = build_adapted_basis(id, {1, GaussianRational::i(), 0}, RootMode::ExactOnly);
    CHECK(uni.kind == AdaptedKind::UNIPOTENT);
    CHECK(adapted_basis_residual(id, uni) == 0.0);

    CHECK(kind_of([&] { build_adapted_basis(id, {1, 1, 0}); }) == ErrorKind::BadNorm);
    CHECK(kind_of([&] { build_adapted_basis(id, {0, 0, 0}); }) == ErrorKind::BadNorm);

    // e1-perp restricts to diag(2, 3): no exact isotropic lines
    const QuadraticForm d(CMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(kind_of([&] { build_adapted_basis(d, {1, 0, 0}, RootMode::ExactOnly); }) == ErrorKind::NoExactRoot);
    const auto fl = build_adapted_basis(d, {1, 0, 0});
    CHECK_FALSE(fl.exact);
    CHECK(adapted_basis_residual(d, fl) < 1e-12);

    Rng rng(24);
    for (int t = 0; t < 30; ++t) {
        const QuadraticForm q = testing::random_nondegenerate_form(rng, 3);
        const Vector v = testing::random_vector(rng, 3);
        const GaussianRational n = q.norm(v);
        if (n.is_zero()) continue;
        const auto root = exact_sqrt(n);
        if (!root) continue;
        const auto b = build_adapted_basis(q, scale(root->inverse(), v));
        CHECK(b.kind == AdaptedKind::SEMISIMPLE);
        CHECK(adapted_basis_residual(q, b) < 1e-9);
    }
}

TEST_CASE("unipotent one-parameter group") {
    const PolyMatrix l = unipotent_isotropy_matrix(CPoly::x());
    CHECK(l.evaluate(1) == CMatrix{{1, 1, frac(-1, 2)}, {0, 1, -1}, {0, 0, 1}});
    CHECK(l.derivative().evaluate(0) == testing::unipotent_generator());
    const PolyMatrix q(unipotent_adapted_gram());
    CHECK((l.transpose() * q * l - q).is_zero());
    CHECK(is_skew_for(QuadraticForm(unipotent_adapted_gram()), testing::unipotent_generator()));

    Rng rng(25);
    for (int t = 0; t < 30; ++t) {
        const GaussianRational s = testing::gaussian(rng), u = testing::gaussian(rng);
        CHECK(l.evaluate(s) * l.evaluate(u) == l.evaluate(s + u));
    }
}
