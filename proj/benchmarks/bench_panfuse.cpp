// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/panfuse.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

panfuse::Raster noise(std::size_t size, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dn(0, 255);
    panfuse::Raster r(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            r(i, j) = dn(rng);
    return r;
}

panfuse::MultiBandImage noise_rgb(std::size_t size)
{
    return panfuse::MultiBandImage({noise(size, 1), noise(size, 2), noise(size, 3)});
}

void BM_BoxLpf(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto img = noise(size, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(panfuse::box_lpf(img));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size * size));
}
BENCHMARK(BM_BoxLpf)->RangeMultiplier(2)->Range(128, 1024);

void BM_Fuse(benchmark::State &state)
{
    const auto method = static_cast<panfuse::FusionMethod>(state.range(0));
    const auto ms = noise_rgb(512);
    const auto pan = noise(512, 9);
    state.SetLabel(std::string(panfuse::to_string(method)));
    for (auto _ : state)
        benchmark::DoNotOptimize(panfuse::fuse(method, ms, pan));
}
BENCHMARK(BM_Fuse)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_EvaluateAll(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    const auto ms = noise_rgb(size);
    const auto pan = noise(size, 9);
    const auto fused = panfuse::fuse_sf(ms, pan);
    for (auto _ : state)
        benchmark::DoNotOptimize(panfuse::evaluate_all(ms, pan, fused, "bench", "SF"));
}
BENCHMARK(BM_EvaluateAll)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
