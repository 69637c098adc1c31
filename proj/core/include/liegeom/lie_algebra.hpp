#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liegeom/gaussian_rational.hpp"
#include "liegeom/matrix.hpp"

namespace liegeom {

class QuadraticForm;

using Triple = std::array<std::size_t, 3>;

/// Finite-dimensional complex Lie algebra given by structure constants
/// c^k_{ij}, meaning [e_i, e_j] = sum_k c^k_{ij} e_k.
///
/// Antisymmetry is enforced on construction. The Jacobi identity is
/// certified (see jacobi_defect) rather than enforced, so that corrupted
/// tables can still be built and diagnosed.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Zero brackets on the given basis.
    explicit LieAlgebra(std::vector<std::string> basis_names);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    const GaussianRational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim() + j) * dim() + k];
    }
    /// Basis bracket [e_i, e_j] as a coordinate vector.
    Vector bracket_basis(std::size_t i, std::size_t j) const;

    /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, std::span<const GaussianRational> value);
    void set_bracket(const std::string& a, const std::string& b, std::span<const GaussianRational> value);
    /// Sets the single constant c^k_{ij} (and c^k_{ji} = -value).
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const GaussianRational& value);

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

private:
    std::vector<std::string> names_;
    std::vector<GaussianRational> c_;
};

enum class AlgebraClass { ABELIAN_C3, HEIS, SOL, SL2 };

std::string to_string(AlgebraClass c);
std::optional<AlgebraClass> algebra_class_from_string(const std::string& s);

Vector bracket(const LieAlgebra& g, std::span<const GaussianRational> x, std::span<const GaussianRational> y);

struct JacobiDefect {
    Rational magnitude;            ///< max over components of max(|re|, |im|); 0 iff Jacobi holds
    std::optional<Triple> witness; ///< a basis triple attaining the maximum
};

JacobiDefect jacobi_defect(const LieAlgebra& g);

CMatrix ad(const LieAlgebra& g, std::span<const GaussianRational> x);
CMatrix ad_basis(const LieAlgebra& g, std::size_t i);
QuadraticForm killing_form(const LieAlgebra& g);

/// Basis of [A, B] for subspaces given by spanning vectors.
std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& a, const std::vector<Vector>& b);
std::vector<std::size_t> derived_series(const LieAlgebra& g);
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
std::vector<Vector> center(const LieAlgebra& g);
/// True iff the span of `vectors` is closed under the bracket.
bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& vectors);
/// Structure constants of the subalgebra spanned by `basis` (must be closed and independent).
LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> names);
/// Table in the new basis given by the columns of `p`: e'_i = sum_r p(r,i) e_r.
LieAlgebra change_basis(const LieAlgebra& g, const CMatrix& p);

bool is_unimodular(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);

AlgebraClass classify_3d_unimodular(const LieAlgebra& g);

/// "3,1,0"
std::string dims_to_string(const std::vector<std::size_t>& dims);

}  // namespace liegeom
