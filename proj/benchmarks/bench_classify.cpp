// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "pinion/orbit.hpp"

namespace {

pinion::ClassifyOptions sweep_opts() {
    pinion::ClassifyOptions o;
    o.steps_per_period = 200;
    return o;
}

// Fast-converging rotating cell: the common case of a basin raster.
void BM_classify_rotating(benchmark::State& state) {
    pinion::ReducedParams p;
    p.eps = 0.5;
    p.w = 0.185;
    p.y_s = 1.4;
    p.omega_s = 2.0 / 3.0;
    for (auto _ : state) {
        const pinion::OrbitSummary s = pinion::classify_orbit(p, {0.0, 0.0, 0.0}, sweep_opts());
        benchmark::DoNotOptimize(s.mean_velocity);
    }
}
BENCHMARK(BM_classify_rotating);

// Chaotic cell: exits through the tangent screen.
void BM_classify_chaotic(benchmark::State& state) {
    pinion::ReducedParams p;
    p.eps = 0.5;
    p.y_s = 1.2;
    p.omega_s = 2.0 / 3.0;
    for (auto _ : state) {
        const pinion::OrbitSummary s = pinion::classify_orbit(p, {0.0, 0.0, 0.0}, sweep_opts());
        benchmark::DoNotOptimize(s.lambda);
    }
}
BENCHMARK(BM_classify_chaotic);

// Locked cell.
void BM_classify_locked(benchmark::State& state) {
    pinion::ReducedParams p;
    p.eps = 0.5;
    p.w = 0.1;
    p.omega_s = 1.0;
    for (auto _ : state) {
        const pinion::OrbitSummary s = pinion::classify_orbit(p, {0.0, 0.0, 0.0}, sweep_opts());
        benchmark::DoNotOptimize(s.identity_residual);
    }
}
BENCHMARK(BM_classify_locked);

} // namespace
