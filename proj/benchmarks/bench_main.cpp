#include <benchmark/benchmark.h>

#include "prefgeo/arrangement.hpp"
#include "prefgeo/constructions.hpp"

using namespace prefgeo;

static void BM_BuildBisector(benchmark::State& state) {
    Point2 c1 = make_point(3, 3), c2 = make_point(8, 6);
    NormTag norm = static_cast<NormTag>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_bisector(norm, c1, c2));
}
BENCHMARK(BM_BuildBisector)->Arg(0)->Arg(1)->Arg(2);

static void BM_EnumerateCells(benchmark::State& state) {
    Embedding2 emb = theta_m4_embedding(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(emb, NormTag::L1));
}
BENCHMARK(BM_EnumerateCells)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Recognize(benchmark::State& state) {
    Embedding2 emb{{make_point(1, 5), make_point(4, 2), make_point(6, 8), make_point(9, 3)}};
    std::vector<Cell> cells = enumerate_cells(emb, NormTag::L2);
    Profile prof;
    prof.m = 4;
    for (const Cell& c : cells) prof.rankings.insert(c.ranking);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_l2_four(prof));
}
BENCHMARK(BM_Recognize)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
