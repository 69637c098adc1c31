#include "liegeom/linalg.hpp"

#include "liegeom/error.hpp"

namespace liegeom {

RowEchelon row_reduce(CMatrix m) {
    RowEchelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (!m(r, c).is_zero()) {
                found = r;
                break;
            }
        if (found == rows) continue;
        if (found != pivot_row)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(found, k), m(pivot_row, k));

        const GaussianRational inv = m(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m(r, c).is_zero()) continue;
            const GaussianRational factor = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(pivot_row, k).is_zero()) m(r, k) -= factor * m(pivot_row, k);
        }
        out.pivots.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const CMatrix& a) { return row_reduce(a).rank(); }

GaussianRational determinant(const CMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    CMatrix m = a;
    const std::size_t n = m.rows();
    GaussianRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t found = n;
        for (std::size_t r = c; r < n; ++r)
            if (!m(r, c).is_zero()) {
                found = r;
                break;
            }
        if (found == n) return 0;
        if (found != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(found, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        const GaussianRational inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const GaussianRational factor = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
        }
    }
    return det;
}

std::optional<CMatrix> inverse(const CMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    CMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    CMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::optional<LinearSolution> solve_linear(const CMatrix& a, std::span<const GaussianRational> b) {
    if (a.rows() != b.size()) throw Error(ErrorKind::ShapeMismatch, "solve_linear: rows of A differ from length of b");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    CMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug(r, c) = a(r, c);
        aug(r, cols) = b[r];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;

    LinearSolution sol;
    sol.x.assign(cols, GaussianRational());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.x[e.pivots[r]] = e.reduced(r, cols);
    sol.kernel_dim = cols - e.rank();
    return sol;
}

std::vector<Vector> kernel(const CMatrix& a) {
    const std::size_t cols = a.cols();
    RowEchelon e = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n) {
    if (vectors.empty()) return {};
    RowEchelon e = row_reduce(CMatrix::from_rows(vectors));
    if (e.reduced.cols() != n) throw Error(ErrorKind::ShapeMismatch, "span_basis: vector length");
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < e.rank(); ++r) basis.push_back(e.reduced.row(r));
    return basis;
}

bool linearly_independent(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return true;
    return rank(CMatrix::from_rows(vectors)) == vectors.size();
}

bool in_span(const std::vector<Vector>& basis, std::span<const GaussianRational> v) {
    if (basis.empty()) return is_zero(v);
    return coordinates(basis, v).has_value();
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const GaussianRational> v) {
    if (basis.empty()) {
        if (is_zero(v)) return Vector{};
        return std::nullopt;
    }
    auto sol = solve_linear(CMatrix::from_columns(basis), v);
    if (!sol) return std::nullopt;
    return sol->x;
}

namespace {

Vector flatten(const CMatrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

}  // namespace

CPoly min_poly(const CMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "min_poly of non-square matrix");
    const std::size_t n = a.rows();
    // Krylov sequence I, A, A^2, ...: the first power dependent on its
    // predecessors yields the minimal polynomial.
    std::vector<Vector> powers{flatten(CMatrix::identity(n))};
    CMatrix current = CMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        current = current * a;
        Vector target = flatten(current);
        if (auto coeffs = coordinates(powers, target)) {
            std::vector<GaussianRational> c(k + 1);
            for (std::size_t j = 0; j < k; ++j) c[j] = -(*coeffs)[j];
            c[k] = 1;
            return CPoly(std::move(c));
        }
        powers.push_back(std::move(target));
    }
    throw Error(ErrorKind::PreconditionViolated, "minimal polynomial exceeded matrix size");
}

CPoly char_poly(const CMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "char_poly of non-square matrix");
    // Faddeev-LeVerrier over Q(i).
    const std::size_t n = a.rows();
    std::vector<GaussianRational> c(n + 1);
    c[n] = 1;
    CMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -(a * m).trace() / GaussianRational(static_cast<long>(k));
    }
    return CPoly(std::move(c));
}

bool is_nilpotent_matrix(const CMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "is_nilpotent_matrix of non-square matrix");
    return power(a, static_cast<unsigned>(a.rows())).is_zero();
}

bool is_semisimple_matrix(const CMatrix& a) {
    const CPoly p = min_poly(a);
    return gcd(p, p.derivative()).is_constant();
}

}  // namespace liegeom
