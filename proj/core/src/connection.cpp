#include "liegeom/connection.hpp"

#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

Vector ConnectionTable::nabla_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
    return v;
}

Vector ConnectionTable::nabla(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "nabla: vector length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const GaussianRational w = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!(*this)(i, j, k).is_zero()) out[k] += w * (*this)(i, j, k);
        }
    }
    return out;
}

Vector CurvatureTensor::apply_basis(std::size_t i, std::size_t j, std::size_t k) const {
    Vector v(dim_);
    for (std::size_t l = 0; l < dim_; ++l) v[l] = (*this)(i, j, k, l);
    return v;
}

Vector CurvatureTensor::apply(std::span<const GaussianRational> x, std::span<const GaussianRational> y,
                              std::span<const GaussianRational> z) const {
    if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "R: vector length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                if (z[k].is_zero()) continue;
                const GaussianRational w = x[i] * y[j] * z[k];
                for (std::size_t l = 0; l < dim_; ++l)
                    if (!(*this)(i, j, k, l).is_zero()) out[l] += w * (*this)(i, j, k, l);
            }
        }
    }
    return out;
}

bool CurvatureTensor::is_zero() const { return liegeom::is_zero(r_); }

ConnectionTable levi_civita(const LieAlgebra& g, const QuadraticForm& q) {
    const std::size_t n = g.dim();
    if (q.dim() != n) throw Error(ErrorKind::ShapeMismatch, "levi_civita: form and algebra dimensions differ");
    q.require_nondegenerate("levi_civita");
    const CMatrix g_inv = *inverse(q.gram());

    // q([e_a, e_b], e_c) for all a, b, c.
    std::vector<GaussianRational> qb(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vector br = g.bracket_basis(a, b);
            for (std::size_t c = 0; c < n; ++c) qb[(a * n + b) * n + c] = q.apply(br, unit_vector(n, c));
        }
    auto q_br = [&](std::size_t a, std::size_t b, std::size_t c) -> const GaussianRational& { return qb[(a * n + b) * n + c]; };

    const GaussianRational half = GaussianRational::fraction(1, 2);
    ConnectionTable conn(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lowered(n);
            for (std::size_t k = 0; k < n; ++k)
                lowered[k] = half * (q_br(i, j, k) - q_br(j, k, i) + q_br(k, i, j));
            const Vector raised = g_inv * lowered;
            for (std::size_t k = 0; k < n; ++k) conn(i, j, k) = raised[k];
        }
    return conn;
}

CurvatureTensor curvature(const LieAlgebra& g, const ConnectionTable& conn) {
    const std::size_t n = g.dim();
    if (conn.dim() != n) throw Error(ErrorKind::ShapeMismatch, "curvature: connection dimension");
    CurvatureTensor r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector eij = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
                Vector value = conn.nabla(ei, conn.nabla_basis(j, k));
                value = sub(value, conn.nabla(ej, conn.nabla_basis(i, k)));
                value = sub(value, conn.nabla(eij, unit_vector(n, k)));
                for (std::size_t l = 0; l < n; ++l) r(i, j, k, l) = value[l];
            }
        }
    return r;
}

std::optional<GaussianRational> sectional_curvature(const QuadraticForm& q, const CurvatureTensor& r,
                                                    std::span<const GaussianRational> x,
                                                    std::span<const GaussianRational> y) {
    if (!linearly_independent({Vector(x.begin(), x.end()), Vector(y.begin(), y.end())}))
        throw Error(ErrorKind::DependentVectors, "sectional_curvature: plane spanned by dependent vectors");
    const GaussianRational qxy = q.apply(x, y);
    const GaussianRational denom = q.norm(x) * q.norm(y) - qxy * qxy;
    if (denom.is_zero()) return std::nullopt;
    return q.apply(r.apply(x, y, y), x) / denom;
}

std::string CurvatureVerdict::to_string() const {
    return constant ? "Constant(" + k.to_string() + ")" : std::string("NotConstant");
}

CurvatureVerdict constant_curvature(const QuadraticForm& q, const CurvatureTensor& r) {
    const std::size_t n = q.dim();
    q.require_nondegenerate("constant_curvature");
    CurvatureVerdict verdict;

    // Candidate k from the lexicographically first nondegenerate coordinate plane.
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
            if (auto k = sectional_curvature(q, r, unit_vector(n, i), unit_vector(n, j))) {
                verdict.k = *k;
                found = true;
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                // R(e_i, e_j) e_l = k (q(e_j, e_l) e_i - q(e_i, e_l) e_j)
                Vector expected(n);
                expected[i] += verdict.k * q(j, l);
                expected[j] -= verdict.k * q(i, l);
                for (std::size_t m = 0; m < n; ++m)
                    if (r(i, j, l, m) != expected[m]) {
                        verdict.witness = Triple{i, j, l};
                        return verdict;
                    }
            }
    verdict.constant = true;
    return verdict;
}

CurvatureVerdict constant_curvature(const LieAlgebra& g, const QuadraticForm& q) {
    const auto conn = levi_civita(g, q);
    return constant_curvature(q, curvature(g, conn));
}

QuadraticForm ricci(const CurvatureTensor& r) {
    const std::size_t n = r.dim();
    CMatrix ric(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) ric(x, y) += r(z, x, y, z);
    return QuadraticForm(std::move(ric));
}

GaussianRational divergence(const ConnectionTable& conn, std::span<const GaussianRational> x) {
    const std::size_t n = conn.dim();
    GaussianRational tr;
    for (std::size_t a = 0; a < n; ++a) tr += conn.nabla(unit_vector(n, a), x)[a];
    return tr;
}

std::optional<Triple> torsion_violation(const LieAlgebra& g, const ConnectionTable& conn) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector t = sub(sub(conn.nabla_basis(i, j), conn.nabla_basis(j, i)), g.bracket_basis(i, j));
            for (std::size_t k = 0; k < n; ++k)
                if (!t[k].is_zero()) return Triple{i, j, k};
        }
    return std::nullopt;
}

std::optional<Triple> metric_violation(const QuadraticForm& q, const ConnectionTable& conn) {
    const std::size_t n = q.dim();
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x; y < n; ++y) {
                const GaussianRational lhs =
                    q.apply(conn.nabla_basis(z, x), unit_vector(n, y)) + q.apply(unit_vector(n, x), conn.nabla_basis(z, y));
                if (!lhs.is_zero()) return Triple{z, x, y};
            }
    return std::nullopt;
}

std::optional<Triple> antisymmetry_violation(const CurvatureTensor& r) {
    const std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (r(i, j, k, l) != -r(j, i, k, l)) return Triple{i, j, k};
    return std::nullopt;
}

std::optional<Triple> bianchi_violation(const CurvatureTensor& r) {
    const std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)).is_zero()) return Triple{i, j, k};
    return std::nullopt;
}

std::optional<Triple> skew_violation(const QuadraticForm& q, const CurvatureTensor& r) {
    const std::size_t n = r.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t w = k; w < n; ++w) {
                    const GaussianRational s = q.apply(r.apply_basis(i, j, k), unit_vector(n, w)) +
                                               q.apply(r.apply_basis(i, j, w), unit_vector(n, k));
                    if (!s.is_zero()) return Triple{i, j, k};
                }
    return std::nullopt;
}

}  // namespace liegeom
