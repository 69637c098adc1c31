#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeom/lie_algebra.hpp"
#include "liegeom/quadratic_form.hpp"

namespace liegeom {

/// An algebraic model G/I: a Lie algebra, an isotropy subalgebra, an explicit
/// complement basis standing for G/I, and optionally a form on that complement.
class HomogeneousModel {
public:
    HomogeneousModel(LieAlgebra g, std::vector<Vector> isotropy, std::vector<Vector> complement,
                     std::vector<std::string> complement_names, std::optional<QuadraticForm> form = std::nullopt);

    const LieAlgebra& algebra() const { return g_; }
    const std::vector<Vector>& isotropy() const { return isotropy_; }
    const std::vector<Vector>& complement() const { return complement_; }
    const std::vector<std::string>& complement_names() const { return complement_names_; }
    const std::optional<QuadraticForm>& form() const { return form_; }
    std::size_t quotient_dim() const { return complement_.size(); }

    HomogeneousModel with_form(QuadraticForm form) const;

    /// Splits x into (isotropy coordinates, complement coordinates).
    std::pair<Vector, Vector> split(std::span<const GaussianRational> x) const;

private:
    LieAlgebra g_;
    std::vector<Vector> isotropy_;
    std::vector<Vector> complement_;
    std::vector<std::string> complement_names_;
    std::optional<QuadraticForm> form_;
    CMatrix split_;  // inverse of [isotropy | complement]
};

enum class IsotropyType { UNIPOTENT, SEMISIMPLE, MIXED };

std::string to_string(IsotropyType t);

/// Matrix of ad(y) acting on G/I in the complement basis; y must lie in I.
CMatrix induced_ad(const HomogeneousModel& m, std::span<const GaussianRational> y);

/// Requires a 1-dimensional isotropy. A nilpotent induced action (including
/// the zero action) is reported as UNIPOTENT.
IsotropyType isotropy_type(const HomogeneousModel& m);

/// Basis of ad(I)-invariant symmetric forms on G/I.
std::vector<CMatrix> invariant_forms(const HomogeneousModel& m);

/// True iff A^T S + S A = 0 for every isotropy generator; throws MissingForm.
bool check_invariance(const HomogeneousModel& m);

struct StabilizerResult {
    std::vector<Vector> basis;
    bool bracket_closed = false;
};

/// {a in G : [a, W] is contained in W}; W must contain the isotropy.
StabilizerResult subalgebra_stabilizing(const HomogeneousModel& m, const std::vector<Vector>& w);

/// For SEMISIMPLE isotropy: true iff the center of G is nontrivial.
bool center_check_semisimple_isotropy(const HomogeneousModel& m);

/// Diagonal of the induced isotropy action when it is diagonal; nullopt otherwise.
std::optional<Vector> isotropy_weights(const HomogeneousModel& m);

}  // namespace liegeom
