#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace liegeom {

using Rational = mpq_class;

/// Exact complex number re + im*i with arbitrary-precision rational parts.
///
/// Both parts are always kept in canonical form (positive denominator,
/// lowest terms), so structural equality is value equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational fraction(long num, long den);
    static GaussianRational complex(long re_num, long re_den, long im_num, long im_den);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2, exact.
    Rational norm_squared() const { return re_ * re_ + im_ * im_; }
    /// max(|re|, |im|): the exact sup-norm used for defect reporting.
    Rational max_abs() const;
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical text "a/b + c/d i" (parts omitted when zero).
    std::string to_string() const;

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Canonical text of a rational: "a" or "a/b".
std::string rational_to_string(const Rational& q);

/// Exact square root in Q(i) when one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace liegeom
