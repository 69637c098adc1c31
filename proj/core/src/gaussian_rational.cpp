#include "liegeom/gaussian_rational.hpp"

#include <sstream>

#include "liegeom/error.hpp"

namespace liegeom {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::NotLieAlgebra: return "NotLieAlgebra";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::DependentVectors: return "DependentVectors";
        case ErrorKind::BadNorm: return "BadNorm";
        case ErrorKind::NoExactRoot: return "NoExactRoot";
        case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
        case ErrorKind::NotSubalgebraInvariant: return "NotSubalgebraInvariant";
        case ErrorKind::WrongIsotropyDimension: return "WrongIsotropyDimension";
        case ErrorKind::WrongIsotropyType: return "WrongIsotropyType";
        case ErrorKind::MissingForm: return "MissingForm";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::EmptyCatalog: return "EmptyCatalog";
        case ErrorKind::DegenerateSample: return "DegenerateSample";
    }
    return "Unknown";
}

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return GaussianRational(Rational(num, den));
}

GaussianRational GaussianRational::complex(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

Rational GaussianRational::max_abs() const {
    Rational a = abs(re_);
    Rational b = abs(im_);
    return a < b ? b : a;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Rational n = norm_squared();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) return rational_to_string(re_);

    auto imag_part = [](const Rational& m) {
        // m > 0
        return m == 1 ? std::string("i") : rational_to_string(m) + " i";
    };
    std::string out;
    if (has_re) {
        out = rational_to_string(re_);
        out += sgn(im_) < 0 ? " - " : " + ";
        out += imag_part(abs(im_));
    } else {
        out = (sgn(im_) < 0 ? "-" : "") + imag_part(abs(im_));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational(0);
    if (z.is_real()) {
        if (sgn(z.re()) >= 0) {
            if (auto r = exact_sqrt(z.re())) return GaussianRational(*r);
            return std::nullopt;
        }
        if (auto r = exact_sqrt(Rational(-z.re()))) return GaussianRational(Rational(0), *r);
        return std::nullopt;
    }
    // sqrt(a+bi) = x + yi with x = sqrt((a+r)/2), y = sign(b) sqrt((r-a)/2), r = |z|.
    auto modulus = exact_sqrt(z.norm_squared());
    if (!modulus) return std::nullopt;
    auto x = exact_sqrt(Rational((z.re() + *modulus) / 2));
    auto y = exact_sqrt(Rational((*modulus - z.re()) / 2));
    if (!x || !y) return std::nullopt;
    Rational yy = sgn(z.im()) < 0 ? Rational(-*y) : *y;
    return GaussianRational(*x, yy);
}

}  // namespace liegeom
