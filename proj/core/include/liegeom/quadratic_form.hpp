#pragma once

#include <span>

#include "liegeom/matrix.hpp"

namespace liegeom {

/// Symmetric complex bilinear form given by its Gram matrix in some basis.
/// Degenerate forms are representable (Ricci and Killing forms may be
/// degenerate); operations that need a metric check `nondegenerate()`.
class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(CMatrix gram);

    std::size_t dim() const { return gram_.rows(); }
    const CMatrix& gram() const { return gram_; }
    const GaussianRational& determinant() const { return det_; }
    bool nondegenerate() const { return !det_.is_zero(); }

    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
    GaussianRational apply(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const;
    GaussianRational norm(std::span<const GaussianRational> x) const { return apply(x, x); }

    /// Throws DegenerateForm unless nondegenerate.
    void require_nondegenerate(const char* context) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

private:
    CMatrix gram_;
    GaussianRational det_;
};

}  // namespace liegeom
