#include <benchmark/benchmark.h>

#include <random>

#include "liegeom/catalog.hpp"
#include "liegeom/connection.hpp"
#include "liegeom/linalg.hpp"
#include "liegeom/mobius.hpp"
#include "liegeom/spec_file.hpp"
#include "liegeom/verify.hpp"

using namespace liegeom;

namespace {

CMatrix conjugator(std::mt19937_64& rng) {
    for (;;) {
        CMatrix p(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                p(r, c) = GaussianRational::complex(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3),
                                                    static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        if (!determinant(p).is_zero()) return p;
    }
}

void BM_Determinant4(benchmark::State& state) {
    std::mt19937_64 rng(1);
    CMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = GaussianRational::fraction(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant4);

void BM_JacobiDefect(benchmark::State& state) {
    const LieAlgebra g = c_plus_sl2();
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_defect(g));
}
BENCHMARK(BM_JacobiDefect);

void BM_Classify(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const LieAlgebra g = change_basis(sl2(), conjugator(rng));
    for (auto _ : state) benchmark::DoNotOptimize(classify_3d_unimodular(g));
}
BENCHMARK(BM_Classify);

void BM_LeviCivitaCurvature(benchmark::State& state) {
    const LieAlgebra g = sl2();
    const QuadraticForm q = killing_form(g);
    for (auto _ : state) benchmark::DoNotOptimize(curvature(g, levi_civita(g, q)));
}
BENCHMARK(BM_LeviCivitaCurvature);

void BM_ConstantCurvature(benchmark::State& state) {
    const LieAlgebra g = sl2();
    const QuadraticForm q(CMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    for (auto _ : state) benchmark::DoNotOptimize(constant_curvature(g, q));
}
BENCHMARK(BM_ConstantCurvature);

void BM_SpecRoundTrip(benchmark::State& state) {
    const SpecFile s = from_catalog_entry(find_entry(build_catalog(), "heis_extension"));
    for (auto _ : state) benchmark::DoNotOptimize(parse_spec(serialize(s)));
}
BENCHMARK(BM_SpecRoundTrip);

void BM_Mobius(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mobius_invariance_check(static_cast<std::size_t>(state.range(0)), 42, 1e-9));
}
BENCHMARK(BM_Mobius)->Arg(1000);

void BM_VerifyAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_all());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
