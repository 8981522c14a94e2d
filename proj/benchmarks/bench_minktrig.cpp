#include <minktrig/distortion.hpp>
#include <minktrig/norm_core.hpp>
#include <minktrig/trig.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

using namespace minktrig;

namespace {

NormSpec spec_for(int which) {
    switch (which) {
        case 0: return NormSpec::euclidean();
        case 1: return NormSpec::lp(4.0);
        default: return NormSpec::mixed(4.0);
    }
}

std::vector<Vec2> directions(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    std::vector<Vec2> out(n);
    for (auto& v : out) {
        const double t = angle(rng);
        v = {std::cos(t), std::sin(t)};
    }
    return out;
}

}  // namespace

static void BM_BuildContext(benchmark::State& state) {
    const NormSpec spec = spec_for(static_cast<int>(state.range(0)));
    const auto size = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_context(spec, ContextOptions{size, true, 0.0}));
}
BENCHMARK(BM_BuildContext)->ArgsProduct({{0, 1, 2}, {1024, 4096}})->Unit(benchmark::kMillisecond);

static void BM_Cm(benchmark::State& state) {
    const auto ctx = build_context(spec_for(static_cast<int>(state.range(0))));
    const auto v = directions(1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cm(ctx, v[i % 1024], v[(i + 1) % 1024]));
        ++i;
    }
}
BENCHMARK(BM_Cm)->DenseRange(0, 2);

static void BM_CmInfForm(benchmark::State& state) {
    const auto ctx = build_context(spec_for(static_cast<int>(state.range(0))));
    const auto v = directions(1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cm_inf_form(ctx, v[i % 1024], v[(i + 1) % 1024]));
        ++i;
    }
}
BENCHMARK(BM_CmInfForm)->DenseRange(0, 2);

static void BM_Antinorm(benchmark::State& state) {
    const auto ctx = build_context(spec_for(static_cast<int>(state.range(0))));
    const auto v = directions(1024, 3);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(antinorm(ctx, v[i++ % 1024]));
}
BENCHMARK(BM_Antinorm)->DenseRange(0, 2);

static void BM_GammaFromPoint(benchmark::State& state) {
    const auto ctx = build_context(spec_for(static_cast<int>(state.range(0))));
    const auto v = directions(256, 4);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gamma_from_point(ctx, 2.0 * v[i++ % 256]));
}
BENCHMARK(BM_GammaFromPoint)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

static void BM_GammaPair(benchmark::State& state) {
    const auto ctx = build_context(spec_for(static_cast<int>(state.range(0))));
    const auto v = directions(256, 5);
    std::size_t i = 0;
    for (auto _ : state) {
        const Vec2 x = v[i % 256];
        const Vec2 y = v[(i + 7) % 256];
        ++i;
        if (std::abs(det(x, y)) < 0.05) continue;
        benchmark::DoNotOptimize(gamma_pair(ctx, x, y));
    }
}
BENCHMARK(BM_GammaPair)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
