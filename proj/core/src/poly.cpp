#include "liegeom/poly.hpp"

#include <sstream>

#include "liegeom/error.hpp"

namespace liegeom {

CPoly::CPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CPoly::CPoly(const GaussianRational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

CPoly CPoly::x() { return CPoly(std::vector<GaussianRational>{0, 1}); }

CPoly CPoly::monomial(const GaussianRational& coeff, std::size_t degree) {
    std::vector<GaussianRational> c(degree + 1);
    c[degree] = coeff;
    return CPoly(std::move(c));
}

void CPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational CPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }

GaussianRational CPoly::leading() const { return coeffs_.empty() ? GaussianRational() : coeffs_.back(); }

CPoly CPoly::monic() const {
    if (is_zero()) return *this;
    const GaussianRational lead = leading();
    CPoly out = *this;
    for (auto& c : out.coeffs_) c /= lead;
    return out;
}

CPoly CPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
    return CPoly(std::move(d));
}

GaussianRational CPoly::operator()(const GaussianRational& at) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

CMatrix CPoly::operator()(const CMatrix& at) const {
    if (!at.is_square()) throw Error(ErrorKind::ShapeMismatch, "polynomial of non-square matrix");
    const std::size_t n = at.rows();
    CMatrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

CPoly CPoly::compose(const CPoly& inner) const {
    CPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + CPoly(*it);
    return acc;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CPoly(std::move(out));
}

CPoly CPoly::operator-() const {
    CPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string CPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rational mag = abs(c.re());
            if (!(mag == 1 && k > 0)) coeff = rational_to_string(mag);
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        os << coeff;
        if (!coeff.empty() && !mono.empty()) os << '*';
        os << mono;
        first = false;
    }
    return os.str();
}

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    CPoly quotient;
    CPoly rem = a;
    const GaussianRational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        CPoly term = CPoly::monomial(rem.leading() / lead, shift);
        quotient += term;
        rem -= term * b;
    }
    return {quotient, rem};
}

CPoly gcd(const CPoly& a, const CPoly& b) {
    CPoly x = a;
    CPoly y = b;
    while (!y.is_zero()) {
        CPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyMatrix::PolyMatrix(const CMatrix& constant) : PolyMatrix(constant.rows(), constant.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = CPoly(constant(r, c));
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

CMatrix PolyMatrix::evaluate(const GaussianRational& at) const {
    CMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c)(at);
    return m;
}

PolyMatrix PolyMatrix::derivative() const {
    PolyMatrix d(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] = data_[i].derivative();
    return d;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix product");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c)
            for (std::size_t k = 0; k < a.cols_; ++k) out(r, c) += a(r, k) * b(k, c);
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "polynomial matrix sub");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

std::string PolyMatrix::to_string(const std::string& var) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).to_string(var);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace liegeom
