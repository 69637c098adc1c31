#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "liegeom/cfloat.hpp"
#include "liegeom/poly.hpp"
#include "liegeom/quadratic_form.hpp"

namespace liegeom {

/// Basis of so(q) = {A : A^T G + G A = 0}; dimension n(n-1)/2.
std::vector<CMatrix> skew_algebra(const QuadraticForm& q);

/// Elements of so(q) annihilating every given vector.
std::vector<CMatrix> stabilizer_in_skew(const QuadraticForm& q, const std::vector<Vector>& vectors);

enum class RootMode { ExactOnly, AllowFloat };

/// The two isotropic directions of a nondegenerate plane. Each line is
/// normalized so that its first nonzero coordinate is 1. Exact when the
/// discriminant has a square root in Q(i); otherwise float.
struct IsotropicLines {
    std::variant<std::array<Vector, 2>, std::array<FloatVector, 2>> lines;
    bool exact() const { return lines.index() == 0; }
    const std::array<Vector, 2>& exact_lines() const { return std::get<0>(lines); }
    std::array<FloatVector, 2> float_lines() const;
};

/// For a 2-dimensional form.
IsotropicLines isotropic_lines(const QuadraticForm& plane, RootMode mode = RootMode::AllowFloat, double tol = kDefaultTolerance);
/// For the restriction of q to span{u, v}; lines are returned in ambient coordinates.
IsotropicLines isotropic_lines(const QuadraticForm& q, const Vector& u, const Vector& v,
                               RootMode mode = RootMode::AllowFloat, double tol = kDefaultTolerance);

enum class AdaptedKind { UNIPOTENT, SEMISIMPLE };

std::string to_string(AdaptedKind kind);

struct AdaptedBasis {
    AdaptedKind kind = AdaptedKind::UNIPOTENT;
    bool exact = true;
    std::array<Vector, 3> vectors;             ///< present when exact
    std::array<FloatVector, 3> float_vectors;  ///< always present
};

/// Completes e1 (norm 0 or 1) to an adapted basis. With RootMode::ExactOnly,
/// throws NoExactRoot when a normalization needs an irrational square root.
AdaptedBasis build_adapted_basis(const QuadraticForm& q, const Vector& e1, RootMode mode = RootMode::AllowFloat,
                                 double tol = kDefaultTolerance);

/// Largest deviation of the adapted-basis relations (0 for an exact basis that satisfies them).
double adapted_basis_residual(const QuadraticForm& q, const AdaptedBasis& basis);

/// The unipotent one-parameter group [[1, t, -t^2/2], [0, 1, -t], [0, 0, 1]]
/// with t replaced by the given polynomial.
PolyMatrix unipotent_isotropy_matrix(const CPoly& t);

/// Gram matrix [[0,0,1],[0,1,0],[1,0,0]] of a unipotent adapted basis.
CMatrix unipotent_adapted_gram();

}  // namespace liegeom
