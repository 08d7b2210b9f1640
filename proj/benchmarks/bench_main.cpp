#include "dw/curve.hpp"
#include "dw/model.hpp"

#include <benchmark/benchmark.h>

using namespace dw;

static void BM_RowReduce(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(17);
    Matrix m = random_matrix(rng, n, n, 8);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}
BENCHMARK(BM_RowReduce)->Arg(4)->Arg(8)->Arg(16);

static void BM_VerifyModel(benchmark::State& state) {
    ModelSpec spec{3, {1, 2, 1, 1}, {2, 2, 1}, {1, 2, 1}, 99, 8};
    for (auto _ : state) benchmark::DoNotOptimize(verify_model(spec).pass());
}
BENCHMARK(BM_VerifyModel)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state) {
    SweepParams p;
    p.count = 50;
    auto specs = sweep_specs(p);
    for (auto _ : state) benchmark::DoNotOptimize(verify_models(specs, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Delta(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    CurveSingularity s({PuiseuxBranch({{2, 1}}, {{2 * k + 1, 1}}), PuiseuxBranch({{1, 1}}, {})});
    for (auto _ : state) benchmark::DoNotOptimize(delta_stabilized(s).delta);
}
BENCHMARK(BM_Delta)->Arg(1)->Arg(4)->Arg(20);
BENCHMARK_MAIN();
