// Microbenchmarks for the hot paths: the spectral convolution, a full
// Strang step in both the local and nonlocal models, dispersion sampling,
// and the interior-equilibrium solve that parameter sweeps hammer.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "coophunt/dispersion.hpp"
#include "coophunt/pde.hpp"

using namespace coophunt;

namespace {

SimConfig make_config(int n, double delta) {
    SimConfig cfg;
    cfg.model = baseline_params(0.04);
    cfg.spatial = {0.01, 10.0, delta};
    cfg.grid = {100.0, n};
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    cfg.ic = NoiseIc{1e-5, 1};
    return cfg;
}

std::vector<double> noisy_field(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.5, 0.01);
    std::vector<double> f(n);
    for (double& x : f) x = dist(rng);
    return f;
}

}  // namespace

static void ConvolveSpectral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid1D g{100.0, n};
    const auto f = noisy_field(n, 5);
    for (auto _ : state) {
        auto out = convolve_kernel(f, 25.0, g);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(ConvolveSpectral)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();

// Direct O(n*w) summation for scale: what the spectral path replaces.
static void ConvolveDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid1D g{100.0, n};
    const auto f = noisy_field(n, 5);
    const double delta = 25.0;
    const int w = static_cast<int>(delta / g.dx());
    std::vector<double> out(n);
    for (auto _ : state) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = -w; j <= w; ++j) acc += f[(i + j + n) % n];
            out[i] = acc / (2 * w + 1);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(ConvolveDirect)->RangeMultiplier(2)->Range(1024, 8192)->Complexity();

static void StepLocal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimConfig cfg = make_config(n, 0.0);
    Simulator sim(cfg);
    FieldState s = make_noise_ic(cfg.grid, cfg.model, 1e-5, 3);
    for (auto _ : state) {
        sim.advance(s);
        benchmark::DoNotOptimize(s.u.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(StepLocal)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();

static void StepNonlocal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimConfig cfg = make_config(n, 50.0);
    Simulator sim(cfg);
    FieldState s = make_noise_ic(cfg.grid, cfg.model, 1e-5, 3);
    for (auto _ : state) {
        sim.advance(s);
        benchmark::DoNotOptimize(s.u.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(StepNonlocal)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();

static void DispersionSamples(benchmark::State& state) {
    const int npts = static_cast<int>(state.range(0));
    std::vector<double> ks(npts);
    for (int i = 0; i < npts; ++i) ks[i] = 3.0 * i / (npts - 1);
    const ModelParams p = baseline_params(0.04);
    const SpatialParams sp{0.01, 10.0, 50.0};
    for (auto _ : state) {
        auto curve = nonlocal_dispersion(p, sp, ks);
        benchmark::DoNotOptimize(curve.k.data());
    }
}
BENCHMARK(DispersionSamples)->Arg(256)->Arg(1024)->Arg(4096);

static void InteriorEquilibriumSolve(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> da(0.0, 0.5);
    for (auto _ : state) {
        auto eq = interior_equilibria(baseline_params(da(rng)));
        benchmark::DoNotOptimize(eq.points.data());
    }
}
BENCHMARK(InteriorEquilibriumSolve);

static void NonlocalTuringThreshold(benchmark::State& state) {
    const ModelParams p = baseline_params(0.04);
    for (auto _ : state) {
        auto r = turing_threshold_nonlocal(p, 10.0, 50.0);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(NonlocalTuringThreshold);

BENCHMARK_MAIN();
