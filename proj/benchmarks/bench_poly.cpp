#include <benchmark/benchmark.h>

#include "tailspec/char_poly.hpp"
#include "tailspec/graph.hpp"
#include "tailspec/roots.hpp"

using namespace tailspec;

static void BM_Charpoly(benchmark::State& state) {
    const int rays = static_cast<int>(state.range(0));
    Graph g = build_multistar(std::vector<int>(rays, 3));
    for (auto _ : state) {
        IntPoly p = charpoly(g);
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(g.n);
}
BENCHMARK(BM_Charpoly)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Complexity();

static void BM_SchwenkExpand(benchmark::State& state) {
    Graph g = build_flower(std::vector<int>(state.range(0), 3));
    for (auto _ : state) {
        IntPoly p = schwenk_expand(g, 1);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SchwenkExpand)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_TailEquation(benchmark::State& state) {
    Graph g = build_multistar(std::vector<int>(4, state.range(0)));
    IntPoly p = charpoly(g);
    IntPoly pv = charpoly(delete_vertices(g, {1}));
    for (auto _ : state) {
        TailEquation eq = tail_equation_poly(p, pv);
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(BM_TailEquation)->Arg(2)->Arg(4)->Arg(8);

static void BM_SturmIsolate(benchmark::State& state) {
    // uniform-star polynomial of growing degree
    const int p = static_cast<int>(state.range(0));
    IntPoly poly = IntPoly::monomial(4, 2 * p + 2) + IntPoly::monomial(-5, 2) +
                   IntPoly::constant(1);
    for (auto _ : state) {
        auto ivs = sturm_isolate(poly, -1, 1);
        benchmark::DoNotOptimize(ivs);
    }
}
BENCHMARK(BM_SturmIsolate)->Arg(2)->Arg(6)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
