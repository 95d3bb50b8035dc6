// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "pinion/dynamics.hpp"
#include "pinion/lyapunov.hpp"

namespace {

pinion::ReducedParams fig2() {
    pinion::ReducedParams p;
    p.eps = 0.5;
    p.w = 0.185;
    p.y_s = 1.4;
    p.omega_s = 2.0 / 3.0;
    return p;
}

void BM_rk4_step(benchmark::State& state) {
    const pinion::ReducedParams p = fig2();
    double u = 0.3, v = -0.2, tau = 0.0;
    const double h = p.drive_period() / 200;
    for (auto _ : state) {
        pinion::detail::rk4_step(u, v, tau, h, p);
        tau += h;
        benchmark::DoNotOptimize(u);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_rk4_step);

void BM_tangent_step(benchmark::State& state) {
    const pinion::ReducedParams p = fig2();
    double u = 0.3, v = -0.2, du = 1.0, dv = 0.0, tau = 0.0;
    const double h = p.drive_period() / 200;
    for (auto _ : state) {
        pinion::detail::tangent_rk4_step(u, v, du, dv, tau, h, p);
        tau += h;
        benchmark::DoNotOptimize(dv);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_tangent_step);

void BM_integrate_100_periods(benchmark::State& state) {
    const pinion::ReducedParams p = fig2();
    pinion::IntegrateOptions o;
    o.steps_per_period = static_cast<int>(state.range(0));
    const double tau_end = 100.0 * p.drive_period();
    for (auto _ : state) {
        const pinion::Trajectory t = pinion::integrate({0.0, 0.0, 0.0}, p, tau_end, o);
        benchmark::DoNotOptimize(t.samples.back());
    }
}
BENCHMARK(BM_integrate_100_periods)->Arg(200)->Arg(1000);

} // namespace
