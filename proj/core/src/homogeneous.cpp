#include "liegeom/homogeneous.hpp"

#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

HomogeneousModel::HomogeneousModel(LieAlgebra g, std::vector<Vector> isotropy, std::vector<Vector> complement,
                                   std::vector<std::string> complement_names, std::optional<QuadraticForm> form)
    : g_(std::move(g)),
      isotropy_(std::move(isotropy)),
      complement_(std::move(complement)),
      complement_names_(std::move(complement_names)),
      form_(std::move(form)) {
    const std::size_t n = g_.dim();
    if (complement_names_.size() != complement_.size())
        throw Error(ErrorKind::ShapeMismatch, "complement names and vectors differ in count");
    if (complement_.size() != 3) throw Error(ErrorKind::WrongDimension, "the quotient G/I must be 3-dimensional");
    if (isotropy_.size() + complement_.size() != n)
        throw Error(ErrorKind::WrongDimension, "isotropy and complement do not add up to dim G");
    std::vector<Vector> all = isotropy_;
    all.insert(all.end(), complement_.begin(), complement_.end());
    for (const auto& v : all)
        if (v.size() != n) throw Error(ErrorKind::ShapeMismatch, "model vector length differs from dim G");
    auto inv = inverse(CMatrix::from_columns(all));
    if (!inv) throw Error(ErrorKind::DependentVectors, "isotropy and complement do not form a basis of G");
    split_ = std::move(*inv);
    if (!is_subalgebra(g_, isotropy_)) throw Error(ErrorKind::NotSubalgebraInvariant, "isotropy is not bracket-closed");
    if (form_ && form_->dim() != complement_.size())
        throw Error(ErrorKind::ShapeMismatch, "quotient form dimension differs from the complement");
}

HomogeneousModel HomogeneousModel::with_form(QuadraticForm form) const {
    return {g_, isotropy_, complement_, complement_names_, std::move(form)};
}

std::pair<Vector, Vector> HomogeneousModel::split(std::span<const GaussianRational> x) const {
    const Vector coords = split_ * x;
    const auto k = static_cast<std::ptrdiff_t>(isotropy_.size());
    return {Vector(coords.begin(), coords.begin() + k), Vector(coords.begin() + k, coords.end())};
}

std::string to_string(IsotropyType t) {
    switch (t) {
        case IsotropyType::UNIPOTENT: return "UNIPOTENT";
        case IsotropyType::SEMISIMPLE: return "SEMISIMPLE";
        case IsotropyType::MIXED: return "MIXED";
    }
    return "?";
}

CMatrix induced_ad(const HomogeneousModel& m, std::span<const GaussianRational> y) {
    const auto& g = m.algebra();
    if (y.size() != g.dim()) throw Error(ErrorKind::ShapeMismatch, "induced_ad: vector length");
    if (!in_span(m.isotropy(), y)) throw Error(ErrorKind::PreconditionViolated, "induced_ad: vector is not in the isotropy");
    for (const auto& i : m.isotropy())
        if (!is_zero(m.split(bracket(g, y, i)).second))
            throw Error(ErrorKind::NotSubalgebraInvariant, "ad(y) does not preserve the isotropy");
    const std::size_t q = m.quotient_dim();
    CMatrix a(q, q);
    for (std::size_t j = 0; j < q; ++j) {
        const Vector image = m.split(bracket(g, y, m.complement()[j])).second;
        for (std::size_t r = 0; r < q; ++r) a(r, j) = image[r];
    }
    return a;
}

IsotropyType isotropy_type(const HomogeneousModel& m) {
    if (m.isotropy().size() != 1)
        throw Error(ErrorKind::WrongIsotropyDimension, "isotropy_type needs a 1-dimensional isotropy, got " +
                                                           std::to_string(m.isotropy().size()));
    const CMatrix a = induced_ad(m, m.isotropy().front());
    if (is_nilpotent_matrix(a)) return IsotropyType::UNIPOTENT;
    if (is_semisimple_matrix(a)) return IsotropyType::SEMISIMPLE;
    return IsotropyType::MIXED;
}

std::vector<CMatrix> invariant_forms(const HomogeneousModel& m) {
    const std::size_t n = m.quotient_dim();
    // Unknowns: S(i,j), i <= j.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            slot_of[i][j] = slot_of[j][i] = slots.size();
            slots.emplace_back(i, j);
        }

    std::vector<Vector> rows;
    for (const auto& y : m.isotropy()) {
        const CMatrix a = induced_ad(m, y);
        // (A^T S + S A)(i, j) = sum_r A(r,i) S(r,j) + S(i,r) A(r,j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vector row(slots.size());
                for (std::size_t r = 0; r < n; ++r) {
                    row[slot_of[r][j]] += a(r, i);
                    row[slot_of[i][r]] += a(r, j);
                }
                rows.push_back(std::move(row));
            }
    }

    std::vector<Vector> solutions;
    if (rows.empty()) {
        for (std::size_t s = 0; s < slots.size(); ++s) solutions.push_back(unit_vector(slots.size(), s));
    } else {
        solutions = kernel(CMatrix::from_rows(rows));
    }
    std::vector<CMatrix> forms;
    for (const auto& sol : solutions) {
        CMatrix s(n, n);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            s(slots[k].first, slots[k].second) = sol[k];
            s(slots[k].second, slots[k].first) = sol[k];
        }
        forms.push_back(std::move(s));
    }
    return forms;
}

bool check_invariance(const HomogeneousModel& m) {
    if (!m.form()) throw Error(ErrorKind::MissingForm, "check_invariance: model has no quotient form");
    const CMatrix& s = m.form()->gram();
    for (const auto& y : m.isotropy()) {
        const CMatrix a = induced_ad(m, y);
        if (!(a.transpose() * s + s * a).is_zero()) return false;
    }
    return true;
}

StabilizerResult subalgebra_stabilizing(const HomogeneousModel& m, const std::vector<Vector>& w) {
    const auto& g = m.algebra();
    const std::size_t n = g.dim();
    const auto w_basis = span_basis(w, n);
    for (const auto& i : m.isotropy())
        if (!in_span(w_basis, i)) throw Error(ErrorKind::PreconditionViolated, "W must contain the isotropy");

    StabilizerResult result;
    // Annihilator of W: functionals phi with phi(w) = 0.
    const auto annihilator = w_basis.empty() ? std::vector<Vector>{} : kernel(CMatrix::from_rows(w_basis));
    if (w_basis.empty()) {
        for (std::size_t i = 0; i < n; ++i) result.basis.push_back(unit_vector(n, i));
    } else if (annihilator.empty()) {
        for (std::size_t i = 0; i < n; ++i) result.basis.push_back(unit_vector(n, i));
    } else {
        // phi([a, w]) = sum_i a_i phi([e_i, w]) = 0 for all phi, w.
        std::vector<Vector> rows;
        for (const auto& phi : annihilator)
            for (const auto& wv : w_basis) {
                Vector row(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const Vector br = bracket(g, unit_vector(n, i), wv);
                    for (std::size_t k = 0; k < n; ++k) row[i] += phi[k] * br[k];
                }
                rows.push_back(std::move(row));
            }
        result.basis = kernel(CMatrix::from_rows(rows));
    }
    result.bracket_closed = is_subalgebra(g, result.basis);
    return result;
}

bool center_check_semisimple_isotropy(const HomogeneousModel& m) {
    if (isotropy_type(m) != IsotropyType::SEMISIMPLE)
        throw Error(ErrorKind::WrongIsotropyType, "center check applies to semisimple isotropy only");
    return !center(m.algebra()).empty();
}

std::optional<Vector> isotropy_weights(const HomogeneousModel& m) {
    if (m.isotropy().size() != 1) return std::nullopt;
    const CMatrix a = induced_ad(m, m.isotropy().front());
    Vector diag(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r == c)
                diag[r] = a(r, c);
            else if (!a(r, c).is_zero())
                return std::nullopt;
        }
    return diag;
}

}  // namespace liegeom
