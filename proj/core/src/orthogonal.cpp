#include "liegeom/orthogonal.hpp"

#include <algorithm>

#include "liegeom/error.hpp"
#include "liegeom/linalg.hpp"

namespace liegeom {

namespace {

// Rows of A^T G + G A = 0 (upper triangle) in the unknowns A(r, c) -> r*n + c.
CMatrix skew_system(const QuadraticForm& q) {
    const std::size_t n = q.dim();
    const CMatrix& gm = q.gram();
    CMatrix system(n * (n + 1) / 2, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++row)
            for (std::size_t r = 0; r < n; ++r) {
                system(row, r * n + i) += gm(r, j);
                system(row, r * n + j) += gm(i, r);
            }
    return system;
}

CMatrix unflatten(const Vector& v, std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
}

CMatrix stack(const CMatrix& top, const CMatrix& bottom) {
    CMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

Vector normalize_line(Vector v) {
    auto it = std::find_if(v.begin(), v.end(), [](const GaussianRational& x) { return !x.is_zero(); });
    if (it == v.end()) return v;
    const GaussianRational inv = it->inverse();
    for (auto& x : v) x *= inv;
    return v;
}

FloatVector normalize_line(FloatVector v, double tol) {
    auto it = std::find_if(v.begin(), v.end(), [tol](const CFloat& x) { return x.abs() > tol; });
    if (it == v.end()) return v;
    const CFloat pivot = *it;
    for (auto& x : v) x = x / pivot;
    return v;
}

FloatVector to_float(const Vector& v) {
    FloatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

CFloat float_form(const QuadraticForm& q, const FloatVector& x, const FloatVector& y) {
    CFloat acc;
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) acc = acc + x[i] * CFloat(q(i, j)) * y[j];
    return acc;
}

FloatVector float_combine(CFloat a, const FloatVector& u, CFloat b, const FloatVector& v) {
    FloatVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * v[i];
    return out;
}

FloatVector float_scale(CFloat s, const FloatVector& v) {
    FloatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Vector combine(const GaussianRational& a, const Vector& u, const GaussianRational& b, const Vector& v) {
    return add(scale(a, u), scale(b, v));
}

std::vector<Vector> orthogonal_complement(const QuadraticForm& q, const Vector& v) {
    CMatrix row(1, q.dim());
    const Vector gv = q.gram() * v;
    for (std::size_t c = 0; c < q.dim(); ++c) row(0, c) = gv[c];
    return kernel(row);
}

Vector first_independent_of(const std::vector<Vector>& candidates, const Vector& v) {
    for (const auto& c : candidates)
        if (linearly_independent({v, c})) return c;
    throw Error(ErrorKind::DependentVectors, "no vector independent of the given one");
}

}  // namespace

std::vector<CMatrix> skew_algebra(const QuadraticForm& q) {
    q.require_nondegenerate("skew_algebra");
    std::vector<CMatrix> basis;
    for (const auto& v : kernel(skew_system(q))) basis.push_back(unflatten(v, q.dim()));
    return basis;
}

std::vector<CMatrix> stabilizer_in_skew(const QuadraticForm& q, const std::vector<Vector>& vectors) {
    q.require_nondegenerate("stabilizer_in_skew");
    const std::size_t n = q.dim();
    CMatrix fixes(n * vectors.size(), n * n);
    for (std::size_t a = 0; a < vectors.size(); ++a) {
        if (vectors[a].size() != n) throw Error(ErrorKind::ShapeMismatch, "stabilizer_in_skew: vector length");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) fixes(a * n + r, r * n + c) = vectors[a][c];
    }
    std::vector<CMatrix> basis;
    for (const auto& v : kernel(stack(skew_system(q), fixes))) basis.push_back(unflatten(v, n));
    return basis;
}

std::array<FloatVector, 2> IsotropicLines::float_lines() const {
    if (!exact()) return std::get<1>(lines);
    const auto& ex = exact_lines();
    return {to_float(ex[0]), to_float(ex[1])};
}

IsotropicLines isotropic_lines(const QuadraticForm& plane, RootMode mode, double tol) {
    if (plane.dim() != 2) throw Error(ErrorKind::ShapeMismatch, "isotropic_lines: expected a 2-dimensional form");
    if (!plane.nondegenerate()) throw Error(ErrorKind::DegenerateRestriction, "isotropic_lines: degenerate plane");
    const GaussianRational& p = plane(0, 0);
    const GaussianRational& s = plane(0, 1);
    const GaussianRational& r = plane(1, 1);

    if (p.is_zero()) {
        // p = 0: x-axis is isotropic; the other line solves 2 s x + r y = 0.
        return {std::array<Vector, 2>{normalize_line({1, 0}), normalize_line({-r, GaussianRational(2) * s})}};
    }
    // p t^2 + 2 s t + r = 0 for the slope t = x / y.
    const GaussianRational disc = s * s - p * r;
    if (auto root = exact_sqrt(disc)) {
        const GaussianRational t1 = (-s + *root) / p;
        const GaussianRational t2 = (-s - *root) / p;
        return {std::array<Vector, 2>{normalize_line({t1, 1}), normalize_line({t2, 1})}};
    }
    if (mode == RootMode::ExactOnly)
        throw Error(ErrorKind::NoExactRoot, "discriminant " + disc.to_string() + " has no square root in Q(i)");
    const CFloat root = sqrt(CFloat(disc));
    const CFloat t1 = (-CFloat(s) + root) / CFloat(p);
    const CFloat t2 = (-CFloat(s) - root) / CFloat(p);
    return {std::array<FloatVector, 2>{normalize_line(FloatVector{t1, 1.0}, tol), normalize_line(FloatVector{t2, 1.0}, tol)}};
}

IsotropicLines isotropic_lines(const QuadraticForm& q, const Vector& u, const Vector& v, RootMode mode, double tol) {
    CMatrix restricted{{q.norm(u), q.apply(u, v)}, {q.apply(u, v), q.norm(v)}};
    if (!linearly_independent({u, v})) throw Error(ErrorKind::DependentVectors, "isotropic_lines: dependent spanning vectors");
    const IsotropicLines local = isotropic_lines(QuadraticForm(std::move(restricted)), mode, tol);
    if (local.exact()) {
        const auto& l = local.exact_lines();
        return {std::array<Vector, 2>{normalize_line(combine(l[0][0], u, l[0][1], v)),
                                      normalize_line(combine(l[1][0], u, l[1][1], v))}};
    }
    const auto l = local.float_lines();
    const FloatVector fu = to_float(u), fv = to_float(v);
    return {std::array<FloatVector, 2>{normalize_line(float_combine(l[0][0], fu, l[0][1], fv), tol),
                                       normalize_line(float_combine(l[1][0], fu, l[1][1], fv), tol)}};
}

std::string to_string(AdaptedKind kind) { return kind == AdaptedKind::UNIPOTENT ? "UNIPOTENT" : "SEMISIMPLE"; }

AdaptedBasis build_adapted_basis(const QuadraticForm& q, const Vector& e1, RootMode mode, double tol) {
    if (q.dim() != 3 || e1.size() != 3) throw Error(ErrorKind::ShapeMismatch, "adapted bases live in dimension 3");
    q.require_nondegenerate("build_adapted_basis");
    if (is_zero(e1)) throw Error(ErrorKind::BadNorm, "e1 must be nonzero");

    const GaussianRational n1 = q.norm(e1);
    AdaptedBasis out;
    if (n1.is_one()) {
        out.kind = AdaptedKind::SEMISIMPLE;
        const auto perp = orthogonal_complement(q, e1);
        const IsotropicLines lines = isotropic_lines(q, perp[0], perp[1], mode, tol);
        if (lines.exact()) {
            const auto& l = lines.exact_lines();
            out.vectors = {e1, l[0], scale(q.apply(l[0], l[1]).inverse(), l[1])};
        } else {
            const auto l = lines.float_lines();
            const FloatVector f1 = to_float(e1);
            out.exact = false;
            out.float_vectors = {f1, l[0], float_scale(CFloat(1.0) / float_form(q, l[0], l[1]), l[1])};
            return out;
        }
    } else if (n1.is_zero()) {
        out.kind = AdaptedKind::UNIPOTENT;
        const auto perp = orthogonal_complement(q, e1);
        const Vector w = first_independent_of(perp, e1);
        const GaussianRational wn = q.norm(w);  // nonzero: e1 spans the radical of e1-perp
        if (auto root = exact_sqrt(wn)) {
            const Vector e2 = scale(root->inverse(), w);
            const Vector u = first_independent_of(orthogonal_complement(q, e2), e1);
            const GaussianRational mu = -q.norm(u) / (GaussianRational(2) * q.apply(u, e1));
            const Vector e3raw = add(u, scale(mu, e1));
            out.vectors = {e1, e2, scale(q.apply(e3raw, e1).inverse(), e3raw)};
        } else {
            if (mode == RootMode::ExactOnly)
                throw Error(ErrorKind::NoExactRoot, "norm " + wn.to_string() + " has no square root in Q(i)");
            out.exact = false;
            const FloatVector f1 = to_float(e1);
            const FloatVector f2 = float_scale(CFloat(1.0) / sqrt(CFloat(wn)), to_float(w));
            // e2-perp in floats: any vector orthogonal to e2 and independent of e1.
            const Vector u_exact = first_independent_of(orthogonal_complement(q, w), e1);
            const FloatVector fu = to_float(u_exact);
            const CFloat mu = -float_form(q, fu, fu) / (CFloat(2.0) * float_form(q, fu, f1));
            const FloatVector e3raw = float_combine(1.0, fu, mu, f1);
            out.float_vectors = {f1, f2, float_scale(CFloat(1.0) / float_form(q, e3raw, f1), e3raw)};
            return out;
        }
    } else {
        throw Error(ErrorKind::BadNorm, "e1 has norm " + n1.to_string() + ", expected 0 or 1");
    }
    for (std::size_t i = 0; i < 3; ++i) out.float_vectors[i] = to_float(out.vectors[i]);
    return out;
}

double adapted_basis_residual(const QuadraticForm& q, const AdaptedBasis& basis) {
    const auto& v = basis.float_vectors;
    auto g = [&](std::size_t a, std::size_t b) { return float_form(q, v[a], v[b]); };
    // Expected Gram matrix in the adapted basis.
    std::array<std::array<double, 3>, 3> want{};
    if (basis.kind == AdaptedKind::UNIPOTENT)
        want = {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
    else
        want = {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
    double worst = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b) worst = std::max(worst, (g(a, b) - CFloat(want[a][b])).abs());
    return worst;
}

PolyMatrix unipotent_isotropy_matrix(const CPoly& t) {
    PolyMatrix m(3, 3);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    m(0, 1) = t;
    m(0, 2) = CPoly(GaussianRational::fraction(-1, 2)) * t * t;
    m(1, 2) = -t;
    return m;
}

CMatrix unipotent_adapted_gram() { return CMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}; }

}  // namespace liegeom
