#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "liegeom/gaussian_rational.hpp"

namespace liegeom {

using Vector = std::vector<GaussianRational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(std::span<const GaussianRational> a, std::span<const GaussianRational> b);
Vector sub(std::span<const GaussianRational> a, std::span<const GaussianRational> b);
Vector scale(const GaussianRational& s, std::span<const GaussianRational> v);
bool is_zero(std::span<const GaussianRational> v);

/// Dense row-major matrix of exact Gaussian rationals.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix from_columns(const std::vector<Vector>& columns);
    static CMatrix from_rows(const std::vector<Vector>& rows);
    static CMatrix diagonal(std::span<const GaussianRational> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    CMatrix transpose() const;
    GaussianRational trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const GaussianRational& s, CMatrix m);
    friend Vector operator*(const CMatrix& a, std::span<const GaussianRational> v);
    friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

CMatrix power(const CMatrix& a, unsigned exponent);

}  // namespace liegeom
