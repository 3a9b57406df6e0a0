// Microbenchmarks for the full-space vs compressed pipelines. The headline
// comparison: collective-operator application and coherent-state
// construction cost K^N in full mode but only binom(N+K-1, N) compressed.

#include <benchmark/benchmark.h>

#include "qukit/qukit.hpp"

using namespace qukit;

namespace {

CoherentParams tau_for(int n, int k) {
    CoherentParams params{n, k, {}};
    params.tau.assign(static_cast<std::size_t>(k - 1), cdouble{0.3, -0.2});
    return params;
}

void BM_CollectiveApplyFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Rng rng(1);
    const StateVector psi = random_state(n, k, rng);
    const SiteOperator op = ladder(2, 1, k);
    for (auto _ : state) {
        StateVector out = collective_apply(op, psi);
        benchmark::DoNotOptimize(out.amps.data());
    }
    state.counters["dim"] = static_cast<double>(psi.dim());
}

void BM_CollectiveApplyCompressed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Rng rng(1);
    const Eigen::MatrixXcd mat = collective_compressed(ladder(2, 1, k), n);
    const Eigen::VectorXcd vec = to_orthonormal(random_symmetric(n, k, rng));
    Eigen::VectorXcd out(vec.size());
    for (auto _ : state) {
        out.noalias() = mat * vec;
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["dim"] = static_cast<double>(vec.size());
}

void BM_CoherentProductFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const CoherentParams params = tau_for(n, k);
    for (auto _ : state) {
        StateVector psi = coherent_product(params);
        benchmark::DoNotOptimize(psi.amps.data());
    }
}

void BM_CoherentCoefficientsCompressed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const CoherentParams params = tau_for(n, k);
    for (auto _ : state) {
        SymStateCompressed sym = coherent_coefficients(params);
        benchmark::DoNotOptimize(sym.coeffs.data());
    }
}

void BM_IsProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Rng rng(2);
    const StateVector psi = make_product_state(random_factors(n, k, rng));
    for (auto _ : state) {
        Classification cls = is_product(psi);
        benchmark::DoNotOptimize(cls.max_defect);
    }
}

void BM_ProjectSymmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Rng rng(3);
    const StateVector psi = random_state(n, k, rng);
    for (auto _ : state) {
        SymProjection proj = project_symmetric(psi);
        benchmark::DoNotOptimize(proj.residual_norm);
    }
}

} // namespace

BENCHMARK(BM_CollectiveApplyFull)
    ->Args({8, 2})->Args({12, 2})->Args({16, 2})->Args({8, 3})->Args({10, 3});
BENCHMARK(BM_CollectiveApplyCompressed)
    ->Args({8, 2})->Args({16, 2})->Args({20, 3})->Args({40, 3});
BENCHMARK(BM_CoherentProductFull)->Args({8, 2})->Args({16, 2})->Args({10, 3});
BENCHMARK(BM_CoherentCoefficientsCompressed)
    ->Args({8, 2})->Args({20, 3})->Args({40, 3})->Args({30, 4});
BENCHMARK(BM_IsProduct)->Args({3, 2})->Args({4, 3})->Args({5, 4});
BENCHMARK(BM_ProjectSymmetric)->Args({8, 2})->Args({10, 2})->Args({8, 3});

BENCHMARK_MAIN();
