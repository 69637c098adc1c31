#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace liegeom {

using Complex = std::complex<double>;

/// 2x2 complex matrix {a, b, c, d} acting by z -> (az + b)/(cz + d).
struct Mobius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
    Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
    Complex derivative(Complex z) const;
};

/// |w1' w2' / (w1 - w2)^2 - 1/(z1 - z2)^2| * |z1 - z2|^2 for the metric
/// dz1 dz2 / (z1 - z2)^2 on pairs of distinct points. Throws DegenerateSample
/// when |z1 - z2| or |cz + d| falls below 1e-6.
double mobius_residual(const Mobius& m, Complex z1, Complex z2);

struct MobiusResult {
    double max_residual = 0.0;
    std::size_t samples = 0;
    std::size_t resampled = 0;
    bool passed = false;
};

/// Random SL(2,C) matrices (d = (1 + bc)/a) and point pairs drawn from a
/// seeded generator; degenerate draws are resampled.
MobiusResult mobius_invariance_check(std::size_t samples, std::uint64_t seed, double tol);

}  // namespace liegeom
