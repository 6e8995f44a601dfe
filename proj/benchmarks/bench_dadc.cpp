// Microbenchmarks: neighbor-index implementations head to head, the full
// pipeline on each generator preset, and the baseline's cutoff search.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "dadc/baseline.hpp"
#include "dadc/neighbors.hpp"
#include "dadc/pipeline.hpp"
#include "dadc/rng.hpp"
#include "dadc/synthgen.hpp"

namespace {

dadc::Dataset uniform_cloud(std::size_t n, std::size_t dim) {
    dadc::Rng rng(99);
    dadc::Dataset ds;
    ds.dim = dim;
    for (std::size_t i = 0; i < n * dim; ++i)
        ds.coords.push_back(rng.uniform(-100.0, 100.0));
    return ds;
}

void BM_KnnBrute(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto src = dadc::DistanceSource::from_dataset(uniform_cloud(n, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::brute_force_index(src, 5));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_KnnBrute)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity();

void BM_KnnGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto src = dadc::DistanceSource::from_dataset(uniform_cloud(n, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::grid_index(src, 5));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_KnnGrid)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity();

void BM_PipelineHeart(benchmark::State& state) {
    auto ds = dadc::generate_vdd(dadc::heart_regions(), 1);
    auto src = dadc::DistanceSource::from_dataset(ds);
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::run_dadc(src));
}
BENCHMARK(BM_PipelineHeart);

void BM_PipelineLattice(benchmark::State& state) {
    auto ds = dadc::generate_lattice_preset(1);
    auto src = dadc::DistanceSource::from_dataset(ds);
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::run_dadc(src));
}
BENCHMARK(BM_PipelineLattice);

void BM_PipelineGaussians(benchmark::State& state) {
    auto ds = dadc::generate_mddm(dadc::gaussian_regions(), 1);
    auto src = dadc::DistanceSource::from_dataset(ds);
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::run_dadc(src));
}
BENCHMARK(BM_PipelineGaussians);

void BM_BaselineAutoCutoff(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto src = dadc::DistanceSource::from_dataset(uniform_cloud(n, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(dadc::auto_cutoff(src));
}
BENCHMARK(BM_BaselineAutoCutoff)->Arg(500)->Arg(1000)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
