/**
 * Benchmarks for the hot paths: coset combinatorics, morphism
 * composition, series images of the T-matrix, Gauss factorization, and
 * the center computations. Run with --benchmark_filter=... to select.
 */

#include "benchmark/benchmark.h"

#include "aschur/yangian.hpp"

namespace {

using namespace aschur;

void BM_dA(benchmark::State& state) {
    const CosetMatrix a(std::vector<std::vector<int>>{{1, 0, 3}, {2, 2, 1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(dA(a));
    }
}
BENCHMARK(BM_dA);

void BM_ComposeMergeSplit(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    const Morphism m = merge_gen(a, a);
    const Morphism s = split_gen(a, a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(m, s));
    }
}
BENCHMARK(BM_ComposeMergeSplit)->Arg(1)->Arg(2)->Arg(3);

void BM_SchurProductDegreeZero(benchmark::State& state) {
    const int n = 2, r = static_cast<int>(state.range(0));
    const std::vector<ASElement> gens = as_generators(n, r);
    for (auto _ : state) {
        for (const ASElement& x : gens) {
            benchmark::DoNotOptimize(x * gens.front());
        }
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(gens.size()));
}
BENCHMARK(BM_SchurProductDegreeZero)->Arg(2)->Arg(3);

void BM_DrinfeldImage(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(drinfeld_image(n, r, 4));
    }
}
BENCHMARK(BM_DrinfeldImage)->Args({1, 2})->Args({2, 2})->Args({2, 3});

void BM_GaussFactorize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TMatrixImage t = drinfeld_image(n, 2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_factorize(t));
    }
}
BENCHMARK(BM_GaussFactorize)->Arg(2)->Arg(3);

void BM_CentralBasis(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(central_basis(2, 2, d));
    }
}
BENCHMARK(BM_CentralBasis)->Arg(1)->Arg(2)->Arg(3);

void BM_FilteredDim(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Composition lam = {1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(filtered_dim(lam, lam, d));
    }
}
BENCHMARK(BM_FilteredDim)->Arg(2)->Arg(4)->Arg(6);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
