// OpenMP kernels against their serial references.

#include "gsep/kernels.hpp"
#include "gsep/states.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace gsep;

namespace {

std::vector<CovarianceMatrix> batch(int count) {
    std::vector<CovarianceMatrix> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(states::random_physical(2, static_cast<std::uint64_t>(i)).covariance);
    }
    return out;
}

void BM_criteria_parallel(benchmark::State &state) {
    const auto states = batch(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::evaluate_criteria(states));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_criteria_serial(benchmark::State &state) {
    const auto states = batch(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::evaluate_criteria_reference(states));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const kernels::QuadratureGrid kBenchGrid{6.0, 0.2};

void BM_overlap_parallel(benchmark::State &state) {
    const CovarianceMatrix a = states::random_physical(2, 1).covariance;
    const CovarianceMatrix b = states::random_physical(2, 2).covariance;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::overlap_quadrature(a, b, kBenchGrid));
    }
}

void BM_overlap_serial(benchmark::State &state) {
    const CovarianceMatrix a = states::random_physical(2, 1).covariance;
    const CovarianceMatrix b = states::random_physical(2, 2).covariance;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::overlap_quadrature_reference(a, b, kBenchGrid));
    }
}

}  // namespace

BENCHMARK(BM_criteria_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_criteria_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_overlap_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_overlap_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
