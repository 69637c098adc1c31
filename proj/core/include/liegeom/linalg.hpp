#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liegeom/matrix.hpp"
#include "liegeom/poly.hpp"

namespace liegeom {

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    CMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(CMatrix a);
std::size_t rank(const CMatrix& a);
GaussianRational determinant(const CMatrix& a);
std::optional<CMatrix> inverse(const CMatrix& a);

struct LinearSolution {
    Vector x;                     ///< one particular solution
    std::size_t kernel_dim = 0;   ///< 0 when the solution is unique
};

/// Solves A x = b exactly; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const CMatrix& a, std::span<const GaussianRational> b);

/// Basis of {x : A x = 0}; one vector per free column, with that free entry set to 1.
std::vector<Vector> kernel(const CMatrix& a);

/// A basis (echelon rows) of the span of the given vectors of length n.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n);
bool linearly_independent(const std::vector<Vector>& vectors);
/// True iff v lies in the span of `basis`.
bool in_span(const std::vector<Vector>& basis, std::span<const GaussianRational> v);
/// Coordinates of v in `basis` (columns); nullopt when v is not in the span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const GaussianRational> v);

CPoly min_poly(const CMatrix& a);
CPoly char_poly(const CMatrix& a);
bool is_nilpotent_matrix(const CMatrix& a);
bool is_semisimple_matrix(const CMatrix& a);

}  // namespace liegeom
