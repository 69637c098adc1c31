#include "liegeom/matrix.hpp"

#include <sstream>

#include "liegeom/error.hpp"

namespace liegeom {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

Vector add(std::span<const GaussianRational> a, std::span<const GaussianRational> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector add");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(std::span<const GaussianRational> a, std::span<const GaussianRational> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector sub");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const GaussianRational& s, std::span<const GaussianRational> v) {
    Vector out(v.begin(), v.end());
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(std::span<const GaussianRational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

CMatrix CMatrix::from_columns(const std::vector<Vector>& columns) {
    if (columns.empty()) return {};
    CMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows_) throw Error(ErrorKind::ShapeMismatch, "ragged columns");
        for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    CMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const GaussianRational> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Vector CMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector CMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

GaussianRational CMatrix::trace() const {
    if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "trace of non-square matrix");
    GaussianRational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool CMatrix::is_zero() const { return liegeom::is_zero(data_); }

bool CMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += lhs * b(k, c);
        }
    return out;
}

CMatrix operator*(const GaussianRational& s, CMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
}

Vector operator*(const CMatrix& a, std::span<const GaussianRational> v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
    return out;
}

std::string CMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

CMatrix power(const CMatrix& a, unsigned exponent) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "power of non-square matrix");
    CMatrix result = CMatrix::identity(a.rows());
    CMatrix base = a;
    while (exponent) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

}  // namespace liegeom
