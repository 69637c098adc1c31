#include "liegeom/mobius.hpp"

#include <algorithm>
#include <random>

#include "liegeom/error.hpp"

namespace liegeom {

namespace {

constexpr double kDegenerate = 1e-6;

// Uniform in [lo, hi) from raw 64-bit output, identical on every platform.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Complex draw(std::mt19937_64& rng, double r) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

}  // namespace

Complex Mobius::derivative(Complex z) const {
    const Complex den = c * z + d;
    return (a * d - b * c) / (den * den);
}

double mobius_residual(const Mobius& m, Complex z1, Complex z2) {
    if (std::abs(z1 - z2) < kDegenerate) throw Error(ErrorKind::DegenerateSample, "points too close to the diagonal");
    if (std::abs(m.c * z1 + m.d) < kDegenerate || std::abs(m.c * z2 + m.d) < kDegenerate)
        throw Error(ErrorKind::DegenerateSample, "point too close to the pole");
    const Complex w1 = m.apply(z1), w2 = m.apply(z2);
    const Complex dz = z1 - z2, dw = w1 - w2;
    const Complex lhs = m.derivative(z1) * m.derivative(z2) / (dw * dw);
    const Complex rhs = 1.0 / (dz * dz);
    return std::abs(lhs - rhs) * std::norm(dz);
}

MobiusResult mobius_invariance_check(std::size_t samples, std::uint64_t seed, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::PreconditionViolated, "tolerance must be positive");
    if (samples == 0) throw Error(ErrorKind::PreconditionViolated, "need at least one sample");
    std::mt19937_64 rng(seed);
    MobiusResult result;
    while (result.samples < samples) {
        Mobius m;
        do m.a = draw(rng, 2.0);
        while (std::abs(m.a) < 0.25);
        m.b = draw(rng, 2.0);
        m.c = draw(rng, 2.0);
        m.d = (1.0 + m.b * m.c) / m.a;
        const Complex z1 = draw(rng, 3.0), z2 = draw(rng, 3.0);
        try {
            result.max_residual = std::max(result.max_residual, mobius_residual(m, z1, z2));
            ++result.samples;
        } catch (const Error&) {
            ++result.resampled;
        }
    }
    result.passed = result.max_residual < tol;
    return result;
}

}  // namespace liegeom
