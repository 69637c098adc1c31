#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liegeom/lie_algebra.hpp"
#include "liegeom/quadratic_form.hpp"

namespace liegeom {

/// Christoffel data of a left-invariant connection on the frame e_1..e_n:
/// gamma(i, j, k) is component k of nabla_{e_i} e_j.
class ConnectionTable {
public:
    ConnectionTable() = default;
    explicit ConnectionTable(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k) { return gamma_[(i * dim_ + j) * dim_ + k]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma_[(i * dim_ + j) * dim_ + k];
    }

    Vector nabla_basis(std::size_t i, std::size_t j) const;
    /// nabla_x y for constant-coefficient (left-invariant) fields x, y.
    Vector nabla(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const;

    friend bool operator==(const ConnectionTable& a, const ConnectionTable& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<GaussianRational> gamma_;
};

/// r(i, j, k, l) is component l of R(e_i, e_j) e_k with
/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
class CurvatureTensor {
public:
    CurvatureTensor() = default;
    explicit CurvatureTensor(std::size_t dim) : dim_(dim), r_(dim * dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    Vector apply_basis(std::size_t i, std::size_t j, std::size_t k) const;
    Vector apply(std::span<const GaussianRational> x, std::span<const GaussianRational> y,
                 std::span<const GaussianRational> z) const;
    bool is_zero() const;

    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<GaussianRational> r_;
};

/// Levi-Civita connection of the left-invariant metric q on g, from
/// 2 q(nabla_x y, z) = q([x,y],z) - q([y,z],x) + q([z,x],y).
ConnectionTable levi_civita(const LieAlgebra& g, const QuadraticForm& q);

CurvatureTensor curvature(const LieAlgebra& g, const ConnectionTable& conn);

/// q(R(x,y)y, x) / (q(x,x) q(y,y) - q(x,y)^2); nullopt for a degenerate plane.
/// Throws DependentVectors when x and y are proportional.
std::optional<GaussianRational> sectional_curvature(const QuadraticForm& q, const CurvatureTensor& r,
                                                    std::span<const GaussianRational> x,
                                                    std::span<const GaussianRational> y);

struct CurvatureVerdict {
    bool constant = false;
    GaussianRational k;             ///< candidate (or certified) constant
    std::optional<Triple> witness;  ///< basis triple violating R(x,y)z = k(q(y,z)x - q(x,z)y)
    std::string to_string() const;  ///< "Constant(k)" or "NotConstant"
};

CurvatureVerdict constant_curvature(const LieAlgebra& g, const QuadraticForm& q);
CurvatureVerdict constant_curvature(const QuadraticForm& q, const CurvatureTensor& r);

/// Ric(x,y) = trace(z -> R(z,x)y).
QuadraticForm ricci(const CurvatureTensor& r);

/// div x = trace(a -> nabla_a x).
GaussianRational divergence(const ConnectionTable& conn, std::span<const GaussianRational> x);

/// Identity checks. Each returns the first violating basis triple, if any.
std::optional<Triple> torsion_violation(const LieAlgebra& g, const ConnectionTable& conn);
std::optional<Triple> metric_violation(const QuadraticForm& q, const ConnectionTable& conn);
std::optional<Triple> antisymmetry_violation(const CurvatureTensor& r);
std::optional<Triple> bianchi_violation(const CurvatureTensor& r);
/// Checks q(R(x,y)z, w) = -q(R(x,y)w, z); witness is (x, y, z).
std::optional<Triple> skew_violation(const QuadraticForm& q, const CurvatureTensor& r);

}  // namespace liegeom
