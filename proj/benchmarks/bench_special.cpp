// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "pinion/bessel.hpp"
#include "pinion/force.hpp"

namespace {

void BM_bessel_small(benchmark::State& state) {
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinion::bessel_jn(1, z));
        z += 1e-6;
    }
}
BENCHMARK(BM_bessel_small);

void BM_bessel_large(benchmark::State& state) {
    double z = 5000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinion::bessel_jn(1, z));
        z += 1e-6;
    }
}
BENCHMARK(BM_bessel_large);

void BM_gap_integral_toy(benchmark::State& state) {
    const pinion::ForceKernel k = pinion::toy_kernel();
    for (auto _ : state) benchmark::DoNotOptimize(pinion::gap_integral(0.2, k));
}
BENCHMARK(BM_gap_integral_toy);

void BM_force_amplitude(benchmark::State& state) {
    pinion::RackPinionGeometry g;
    g.length = 10e-6;
    g.radius = 1e-6;
    g.a1 = g.a2 = 10e-9;
    g.wavelength = 1e-6;
    g.gap = 200e-9;
    const pinion::ForceKernel k = pinion::toy_kernel();
    for (auto _ : state) benchmark::DoNotOptimize(pinion::force_amplitude(g, k).force);
}
BENCHMARK(BM_force_amplitude);

} // namespace
