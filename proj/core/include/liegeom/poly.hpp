#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liegeom/gaussian_rational.hpp"
#include "liegeom/matrix.hpp"

namespace liegeom {

/// Univariate polynomial over Q(i), coefficients in ascending degree.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(std::vector<GaussianRational> coeffs);
    CPoly(const GaussianRational& constant);  // NOLINT(google-explicit-constructor)
    CPoly(int constant) : CPoly(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)

    /// The indeterminate x.
    static CPoly x();
    static CPoly monomial(const GaussianRational& coeff, std::size_t degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
    GaussianRational coefficient(std::size_t k) const;
    GaussianRational leading() const;

    CPoly monic() const;
    CPoly derivative() const;
    GaussianRational operator()(const GaussianRational& at) const;
    CMatrix operator()(const CMatrix& at) const;
    /// Substitution p(q(x)).
    CPoly compose(const CPoly& inner) const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly operator-() const;
    friend bool operator==(const CPoly& a, const CPoly& b) = default;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);
/// Monic gcd (zero when both inputs are zero).
CPoly gcd(const CPoly& a, const CPoly& b);

/// Dense matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit PolyMatrix(const CMatrix& constant);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    PolyMatrix transpose() const;
    bool is_zero() const;
    CMatrix evaluate(const GaussianRational& at) const;
    /// Entry-wise derivative in the indeterminate.
    PolyMatrix derivative() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CPoly> data_;
};

}  // namespace liegeom
