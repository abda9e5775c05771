#include <benchmark/benchmark.h>

#include "tailspec/families.hpp"
#include "tailspec/oracle.hpp"
#include "tailspec/sym_eigen.hpp"
#include "tailspec/tail_solver.hpp"

using namespace tailspec;

static void BM_TruncatedEigenvalues(benchmark::State& state) {
    Graph tri = build_flower({2});
    const int L = static_cast<int>(state.range(0));
    SymMatrix m = truncate(tri, L);
    for (auto _ : state) {
        auto eig = sym_eigenvalues(m);
        benchmark::DoNotOptimize(eig);
    }
    state.SetComplexityN(m.dim());
}
BENCHMARK(BM_TruncatedEigenvalues)->Arg(50)->Arg(100)->Arg(200)->Arg(400)
    ->Unit(benchmark::kMillisecond)->Complexity();

static void BM_DiscreteSpectrum(benchmark::State& state) {
    Graph g = build_flower(std::vector<int>(state.range(0), 4));
    for (auto _ : state) {
        SpectrumReport r = discrete_spectrum(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DiscreteSpectrum)->Arg(1)->Arg(2)->Arg(4);

static void BM_StarFamilySolve(benchmark::State& state) {
    std::vector<int> kappa(state.range(0), 3);
    for (auto _ : state) {
        FamilyReport r = star_spectrum(kappa);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_StarFamilySolve)->Arg(2)->Arg(8)->Arg(32);

static void BM_ResolventCheck(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double r = resolvent_check(0.5, 1, 1, L);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResolventCheck)->Arg(20)->Arg(60)->Arg(120);

BENCHMARK_MAIN();
