#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "liegeom/error.hpp"
#include "liegeom/gaussian_rational.hpp"

namespace liegeom {

inline constexpr double kDefaultTolerance = 1e-9;

// Double-precision complex value that refuses NaN and infinities.
class CFloat {
public:
    CFloat() = default;
    CFloat(double re, double im = 0.0) : value_(re, im) { check(); }  // NOLINT
    CFloat(std::complex<double> z) : value_(z) { check(); }          // NOLINT
    explicit CFloat(const GaussianRational& z) : value_(z.re_double(), z.im_double()) { check(); }

    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }
    double abs() const { return std::abs(value_); }
    const std::complex<double>& value() const { return value_; }

    friend CFloat operator+(CFloat a, CFloat b) { return a.value_ + b.value_; }
    friend CFloat operator-(CFloat a, CFloat b) { return a.value_ - b.value_; }
    friend CFloat operator*(CFloat a, CFloat b) { return a.value_ * b.value_; }
    friend CFloat operator/(CFloat a, CFloat b) {
        if (b.value_ == std::complex<double>(0.0, 0.0)) throw Error(ErrorKind::DivisionByZero, "float division by zero");
        return a.value_ / b.value_;
    }
    CFloat operator-() const { return -value_; }

private:
    void check() const {
        if (!std::isfinite(value_.real()) || !std::isfinite(value_.imag()))
            throw Error(ErrorKind::NonFinite, "non-finite complex value");
    }

    std::complex<double> value_{0.0, 0.0};
};

inline bool approx_equal(CFloat a, CFloat b, double tol = kDefaultTolerance) { return (a - b).abs() <= tol; }

inline CFloat sqrt(CFloat z) { return std::sqrt(z.value()); }

using FloatVector = std::vector<CFloat>;

}  // namespace liegeom
