#include "liegeom/lie_algebra.hpp"

#include <sstream>

#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"
#include "liegeom/quadratic_form.hpp"

namespace liegeom {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names)
    : names_(std::move(basis_names)), c_(names_.size() * names_.size() * names_.size()) {}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = constant(i, j, k);
    return v;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const GaussianRational> value) {
    const std::size_t n = dim();
    if (i >= n || j >= n || value.size() != n) throw Error(ErrorKind::ShapeMismatch, "set_bracket");
    if (i == j) {
        if (!is_zero(value)) throw Error(ErrorKind::NotAntisymmetric, "[x,x] must vanish for " + names_[i]);
        return;
    }
    for (std::size_t k = 0; k < n; ++k) {
        c_[(i * n + j) * n + k] = value[k];
        c_[(j * n + i) * n + k] = -value[k];
    }
}

void LieAlgebra::set_bracket(const std::string& a, const std::string& b, std::span<const GaussianRational> value) {
    auto i = index_of(a);
    auto j = index_of(b);
    if (!i || !j) throw Error(ErrorKind::PreconditionViolated, "unknown basis label in bracket " + a + "," + b);
    set_bracket(*i, *j, value);
}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const GaussianRational& value) {
    const std::size_t n = dim();
    if (i >= n || j >= n || k >= n) throw Error(ErrorKind::ShapeMismatch, "set_constant");
    if (i == j) {
        if (!value.is_zero()) throw Error(ErrorKind::NotAntisymmetric, "c^k_ii must vanish");
        return;
    }
    c_[(i * n + j) * n + k] = value;
    c_[(j * n + i) * n + k] = -value;
}

std::string to_string(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::ABELIAN_C3: return "ABELIAN_C3";
        case AlgebraClass::HEIS: return "HEIS";
        case AlgebraClass::SOL: return "SOL";
        case AlgebraClass::SL2: return "SL2";
    }
    return "?";
}

std::optional<AlgebraClass> algebra_class_from_string(const std::string& s) {
    for (auto c : {AlgebraClass::ABELIAN_C3, AlgebraClass::HEIS, AlgebraClass::SOL, AlgebraClass::SL2})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

Vector bracket(const LieAlgebra& g, std::span<const GaussianRational> x, std::span<const GaussianRational> y) {
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::ShapeMismatch, "bracket: vector length differs from dim");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const GaussianRational w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!g.constant(i, j, k).is_zero()) out[k] += w * g.constant(i, j, k);
        }
    }
    return out;
}

JacobiDefect jacobi_defect(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    JacobiDefect result{Rational(0), std::nullopt};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const Vector ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
                Vector sum = bracket(g, ea, g.bracket_basis(b, c));
                sum = add(sum, bracket(g, eb, g.bracket_basis(c, a)));
                sum = add(sum, bracket(g, ec, g.bracket_basis(a, b)));
                for (const auto& x : sum) {
                    Rational m = x.max_abs();
                    if (m > result.magnitude) {
                        result.magnitude = m;
                        result.witness = Triple{a, b, c};
                    }
                }
            }
    return result;
}

CMatrix ad(const LieAlgebra& g, std::span<const GaussianRational> x) {
    const std::size_t n = g.dim();
    if (x.size() != n) throw Error(ErrorKind::ShapeMismatch, "ad: vector length differs from dim");
    CMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = bracket(g, x, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

CMatrix ad_basis(const LieAlgebra& g, std::size_t i) { return ad(g, unit_vector(g.dim(), i)); }

QuadraticForm killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<CMatrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(g, i));
    CMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            b(i, j) = (ads[i] * ads[j]).trace();
            b(j, i) = b(i, j);
        }
    return QuadraticForm(std::move(b));
}

std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::vector<Vector> products;
    for (const auto& x : a)
        for (const auto& y : b) {
            Vector z = bracket(g, x, y);
            if (!is_zero(z)) products.push_back(std::move(z));
        }
    return span_basis(products, g.dim());
}

namespace {

std::vector<Vector> full_basis(std::size_t n) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
    return basis;
}

// Appends dimensions until a term repeats its predecessor or reaches 0;
// the repeated term is kept so a stabilized series shows as e.g. (3,3).
template <typename Next>
std::vector<std::size_t> series(const LieAlgebra& g, Next next) {
    std::vector<Vector> current = full_basis(g.dim());
    std::vector<std::size_t> dims{current.size()};
    while (!current.empty()) {
        std::vector<Vector> following = next(current);
        dims.push_back(following.size());
        if (following.size() == current.size()) break;
        current = std::move(following);
    }
    return dims;
}

}  // namespace

std::vector<std::size_t> derived_series(const LieAlgebra& g) {
    return series(g, [&](const std::vector<Vector>& s) { return bracket_span(g, s, s); });
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
    const auto all = full_basis(g.dim());
    return series(g, [&](const std::vector<Vector>& s) { return bracket_span(g, all, s); });
}

std::vector<Vector> center(const LieAlgebra& g) {
    // x is central iff sum_i x_i c^k_{ij} = 0 for all j, k.
    const std::size_t n = g.dim();
    CMatrix system(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = g.constant(i, j, k);
    return kernel(system);
}

bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& vectors) {
    const auto basis = span_basis(vectors, g.dim());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!in_span(basis, bracket(g, basis[a], basis[b]))) return false;
    return true;
}

LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> names) {
    if (names.size() != basis.size()) throw Error(ErrorKind::ShapeMismatch, "restrict_to: names vs basis");
    if (!linearly_independent(basis)) throw Error(ErrorKind::DependentVectors, "restrict_to: dependent basis");
    LieAlgebra sub(std::move(names));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            auto coords = coordinates(basis, bracket(g, basis[a], basis[b]));
            if (!coords) throw Error(ErrorKind::PreconditionViolated, "restrict_to: span is not bracket-closed");
            sub.set_bracket(a, b, *coords);
        }
    return sub;
}

LieAlgebra change_basis(const LieAlgebra& g, const CMatrix& p) {
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::ShapeMismatch, "change_basis");
    auto p_inv = inverse(p);
    if (!p_inv) throw Error(ErrorKind::DependentVectors, "change_basis: singular matrix");
    LieAlgebra out(g.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i, j, *p_inv * bracket(g, p.column(i), p.column(j)));
    return out;
}

bool is_unimodular(const LieAlgebra& g) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!ad_basis(g, i).trace().is_zero()) return false;
    return true;
}

bool is_nilpotent(const LieAlgebra& g) { return g.dim() == 0 || lower_central_series(g).back() == 0; }

bool is_solvable(const LieAlgebra& g) { return g.dim() == 0 || derived_series(g).back() == 0; }

bool is_semisimple(const LieAlgebra& g) { return g.dim() > 0 && killing_form(g).nondegenerate(); }

AlgebraClass classify_3d_unimodular(const LieAlgebra& g) {
    if (g.dim() != 3) throw Error(ErrorKind::WrongDimension, "classification needs dimension 3, got " + std::to_string(g.dim()));
    const auto defect = jacobi_defect(g);
    if (sgn(defect.magnitude) != 0) throw Error(ErrorKind::NotLieAlgebra, "Jacobi identity fails");
    if (!is_unimodular(g)) throw Error(ErrorKind::NotUnimodular, "trace(ad x) is not identically zero");
    if (is_semisimple(g)) return AlgebraClass::SL2;
    const auto derived = derived_series(g);
    if (derived.size() > 1 && derived[1] == 0) return AlgebraClass::ABELIAN_C3;
    if (is_nilpotent(g)) return AlgebraClass::HEIS;
    return AlgebraClass::SOL;
}

std::string dims_to_string(const std::vector<std::size_t>& dims) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    return os.str();
}

}  // namespace liegeom
