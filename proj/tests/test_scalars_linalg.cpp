#include <doctest.h>

#include <cmath>
#include <limits>

#include "liegeom/cfloat.hpp"
#include "liegeom/error.hpp"
#include "liegeom/gaussian_rational.hpp"
#include "liegeom/linalg.hpp"
#include "liegeom/poly.hpp"
#include "test_support.hpp"

using namespace liegeom;
using liegeom::testing::Rng;

namespace {
const GaussianRational I = GaussianRational::i();
GaussianRational frac(long n, long d) { return GaussianRational::fraction(n, d); }
}  // namespace

TEST_CASE("gaussian rationals stay in lowest terms") {
    CHECK(frac(2, 4) == frac(1, 2));
    CHECK(frac(2, -4).to_string() == "-1/2");
    CHECK(frac(6, 3).to_string() == "2");
    CHECK((frac(1, 3) + frac(1, 6)).to_string() == "1/2");
    CHECK_THROWS_AS(frac(1, 0), Error);
}

TEST_CASE("canonical text form") {
    CHECK(GaussianRational(0).to_string() == "0");
    CHECK(I.to_string() == "i");
    CHECK((-I).to_string() == "-i");
    CHECK((frac(-1, 2) * I).to_string() == "-1/2 i");
    CHECK((frac(1, 2) + I).to_string() == "1/2 + i");
    CHECK((GaussianRational(1) - frac(1, 2) * I).to_string() == "1 - 1/2 i");
    CHECK(GaussianRational::complex(-3, 4, 5, 6).to_string() == "-3/4 + 5/6 i");
}

TEST_CASE("field operations") {
    CHECK(I * I == GaussianRational(-1));
    const GaussianRational z = GaussianRational::complex(1, 2, -2, 3);
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z / z == GaussianRational(1));
    CHECK(z.conj() == GaussianRational::complex(1, 2, 2, 3));
    CHECK(z.norm_squared() == Rational(1, 4) + Rational(4, 9));
    CHECK(z.max_abs() == Rational(2, 3));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), Error);
    try {
        (void)(z / GaussianRational(0));
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("field axioms on random values") {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto a = testing::gaussian(rng), b = testing::gaussian(rng), c = testing::gaussian(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == GaussianRational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
        CHECK(sgn(a.re().get_den()) > 0);
        CHECK(gcd(a.re().get_num(), a.re().get_den()) == 1);
    }
}

TEST_CASE("exact square roots") {
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-1)).has_value());
    CHECK(exact_sqrt(GaussianRational(-1)) == I);
    CHECK(exact_sqrt(GaussianRational(2) * I) == GaussianRational(1) + I);
    CHECK(exact_sqrt(GaussianRational(-2) * I) == GaussianRational(1) - I);
    CHECK_FALSE(exact_sqrt(GaussianRational(2)).has_value());
    CHECK_FALSE(exact_sqrt(I).has_value());

    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto z = testing::gaussian(rng);
        const auto r = exact_sqrt(z * z);
        REQUIRE(r.has_value());
        CHECK(*r * *r == z * z);
        CHECK((*r == z || *r == -z));
    }
}

TEST_CASE("CFloat rejects non-finite values") {
    CHECK_THROWS_AS(CFloat(std::numeric_limits<double>::quiet_NaN()), Error);
    CHECK_THROWS_AS(CFloat(1.0, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(CFloat(1.0) / CFloat(0.0), Error);
    CHECK(approx_equal(sqrt(CFloat(-4.0)), CFloat(0.0, 2.0)));
    CHECK(approx_equal(CFloat(GaussianRational::complex(1, 2, -1, 4)), CFloat(0.5, -0.25)));
}

TEST_CASE("matrix arithmetic") {
    const CMatrix a{{1, 2}, {3, 4}};
    const CMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == CMatrix{{2, 1}, {4, 3}});
    CHECK(a.transpose() == CMatrix{{1, 3}, {2, 4}});
    CHECK(a.trace() == GaussianRational(5));
    CHECK(power(b, 2) == CMatrix::identity(2));
    CHECK((a - a).is_zero());
    CHECK(CMatrix{{1, I}, {I, 2}}.is_symmetric());
    const Vector v = {1, I};
    CHECK(a * v == Vector{GaussianRational(1) + GaussianRational(2) * I, GaussianRational(3) + GaussianRational(4) * I});
    CHECK_THROWS_AS(a * CMatrix(3, 3), Error);
}

TEST_CASE("solve_linear") {
    SUBCASE("identity returns b") {
        const Vector b = {1, frac(1, 2), I};
        const auto s = solve_linear(CMatrix::identity(3), b);
        REQUIRE(s);
        CHECK(s->x == b);
        CHECK(s->kernel_dim == 0);
    }
    SUBCASE("back substitution") {
        const auto s = solve_linear(CMatrix{{1, I}, {0, 1}}, Vector{0, 1});
        REQUIRE(s);
        CHECK(s->x == Vector{-I, 1});
    }
    SUBCASE("inconsistent singular system") {
        const CMatrix a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
        CHECK(rank(a) == 2);
        CHECK_FALSE(solve_linear(a, Vector{1, 3, 0}).has_value());
    }
    SUBCASE("underdetermined") {
        const auto s = solve_linear(CMatrix{{1, 1, 0}}, Vector{2});
        REQUIRE(s);
        CHECK(s->kernel_dim == 2);
    }
    SUBCASE("shape mismatch") { CHECK_THROWS_AS(solve_linear(CMatrix::identity(2), Vector{1, 2, 3}), Error); }
}

TEST_CASE("solutions have zero residual") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const CMatrix a = testing::sparse_matrix(rng, std::max(rows, cols));
        const Vector b = testing::random_vector(rng, a.rows(), 3);
        if (const auto s = solve_linear(a, b)) {
            CHECK(is_zero(sub(a * s->x, b)));
            CHECK(s->kernel_dim == a.cols() - rank(a));
        } else {
            // b outside the column space: appending it raises the rank.
            std::vector<Vector> cols_b;
            for (std::size_t c = 0; c < a.cols(); ++c) cols_b.push_back(a.column(c));
            cols_b.push_back(b);
            CHECK(rank(CMatrix::from_columns(cols_b)) == rank(a) + 1);
        }
    }
}

TEST_CASE("kernel") {
    CHECK(kernel(CMatrix(3, 3)).size() == 3);
    CHECK(kernel(CMatrix{{1, 2}, {3, 4}}).empty());
    const CMatrix r1{{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}};
    CHECK(rank(r1) == 1);
    CHECK(kernel(r1).size() == 2);

    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const CMatrix a = testing::sparse_matrix(rng, 1 + rng() % 5);
        const auto k = kernel(a);
        CHECK(k.size() == a.cols() - rank(a));
        for (const auto& v : k) CHECK(is_zero(a * v));
        if (!k.empty()) CHECK(linearly_independent(k));
    }
}

TEST_CASE("determinant and inverse") {
    CHECK(determinant(CMatrix{{1, 2}, {3, 4}}) == GaussianRational(-2));
    CHECK(determinant(CMatrix{{0, 1}, {1, 0}}) == GaussianRational(-1));
    CHECK_FALSE(inverse(CMatrix{{1, 2}, {2, 4}}).has_value());
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const CMatrix a = testing::random_invertible(rng, 1 + rng() % 4);
        const auto inv = inverse(a);
        REQUIRE(inv);
        CHECK(a * *inv == CMatrix::identity(a.rows()));
        CHECK(determinant(a) * determinant(*inv) == GaussianRational(1));
    }
}

TEST_CASE("span helpers") {
    const Vector a = {1, 0, 0}, b = {0, 1, 0}, c = {1, 1, 0};
    CHECK(linearly_independent({a, b}));
    CHECK_FALSE(linearly_independent({a, b, c}));
    CHECK(span_basis({a, b, c}, 3).size() == 2);
    CHECK(in_span({a, b}, c));
    CHECK_FALSE(in_span({a, b}, Vector{0, 0, 1}));
    CHECK(coordinates({a, c}, Vector{3, 2, 0}) == Vector{1, 2});
}

TEST_CASE("polynomials") {
    const CPoly x = CPoly::x();
    const CPoly p = x * x - 1;
    CHECK(p.degree() == 2);
    CHECK(CPoly().degree() == -1);
    CHECK(p.derivative() == CPoly(2) * x);
    CHECK(p(GaussianRational(3)) == GaussianRational(8));
    CHECK(p.compose(x + 1) == x * x + CPoly(2) * x);
    const auto [q, r] = divmod(p, x - 1);
    CHECK(q == x + 1);
    CHECK(r.is_zero());
    CHECK(gcd(p, (x - 1) * (x - 2)) == x - 1);
    CHECK(gcd(x * x + 1, x - I) == x - I);
    CHECK(p.to_string() == "x^2 - 1");
}

TEST_CASE("minimal polynomial") {
    const CPoly x = CPoly::x();
    CHECK(min_poly(CMatrix::identity(3)) == x - 1);
    CHECK(min_poly(CMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) == x * x * x);
    CHECK(min_poly(CMatrix{{1, 0}, {0, -1}}) == x * x - 1);
    CHECK(char_poly(CMatrix{{1, 0}, {0, -1}}) == x * x - 1);
    CHECK(char_poly(CMatrix::identity(3)) == (x - 1) * (x - 1) * (x - 1));
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
    Rng rng(6);
    for (int t = 0; t < 60; ++t) {
        const CMatrix a = testing::sparse_matrix(rng, 1 + rng() % 4);
        const CPoly m = min_poly(a), c = char_poly(a);
        CHECK(m(a).is_zero());
        CHECK(c(a).is_zero());
        CHECK(m.leading() == GaussianRational(1));
        CHECK(divmod(c, m).second.is_zero());
    }
}

TEST_CASE("nilpotent and semisimple matrices") {
    CHECK(is_nilpotent_matrix(CMatrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}));
    CHECK_FALSE(is_nilpotent_matrix(CMatrix::identity(3)));
    CHECK(is_nilpotent_matrix(testing::unipotent_generator()));

    CHECK(is_semisimple_matrix(CMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
    CHECK_FALSE(is_semisimple_matrix(CMatrix{{0, 1}, {0, 0}}));
    CHECK_FALSE(is_semisimple_matrix(CMatrix{{1, 1}, {0, 1}}));
    CHECK(is_semisimple_matrix(CMatrix{{0, -1}, {1, 0}}));  // eigenvalues +-i
}

TEST_CASE("nilpotent and semisimple exclude each other away from zero") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const CMatrix a = testing::sparse_matrix(rng, 1 + rng() % 4);
        if (a.is_zero()) continue;
        CHECK_FALSE((is_nilpotent_matrix(a) && is_semisimple_matrix(a)));
    }
    CHECK(is_nilpotent_matrix(CMatrix(2, 2)));
    CHECK(is_semisimple_matrix(CMatrix(2, 2)));
}

TEST_CASE("semisimplicity is invariant under conjugation") {
    Rng rng(8);
    const CMatrix samples[] = {CMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}, CMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 3}},
                               testing::unipotent_generator()};
    for (const auto& a : samples)
        for (int t = 0; t < 10; ++t) {
            const CMatrix p = testing::random_invertible(rng, 3);
            const CMatrix b = *inverse(p) * a * p;
            CHECK(is_semisimple_matrix(b) == is_semisimple_matrix(a));
            CHECK(is_nilpotent_matrix(b) == is_nilpotent_matrix(a));
        }
}
