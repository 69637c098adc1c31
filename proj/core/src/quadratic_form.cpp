#include "liegeom/quadratic_form.hpp"

#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

QuadraticForm::QuadraticForm(CMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error(ErrorKind::ShapeMismatch, "Gram matrix must be square");
    if (!gram_.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "Gram matrix must be symmetric");
    det_ = liegeom::determinant(gram_);
}

GaussianRational QuadraticForm::apply(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::ShapeMismatch, "form applied to wrong-length vector");
    GaussianRational acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero() && !gram_(i, j).is_zero()) acc += x[i] * gram_(i, j) * y[j];
    }
    return acc;
}

void QuadraticForm::require_nondegenerate(const char* context) const {
    if (!nondegenerate()) throw Error(ErrorKind::DegenerateForm, std::string(context) + ": form is degenerate");
}

}  // namespace liegeom
