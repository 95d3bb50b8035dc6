// SPDX-License-Identifier: Apache-2.0
#include "pinion/load.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pinion/bessel.hpp"
#include "pinion/errors.hpp"
#include "pinion/workers.hpp"

namespace pinion {

namespace {

void check_orders(int m, int n) {
    if (n < 1) throw std::invalid_argument("load bound: n must be >= 1");
    if (m < 1) throw std::invalid_argument("load bound: m must be >= 1");
}

} // namespace

double load_bound_simple(const ReducedParams& p, int m, int n) {
    p.validate();
    check_orders(m, n);
    return 1.0 - p.eps * p.omega_s * static_cast<double>(m) / static_cast<double>(n);
}

double load_bound_bessel(const ReducedParams& p, int m, int n, double delta) {
    p.validate();
    check_orders(m, n);
    if (!(delta >= 0.0)) throw std::invalid_argument("load_bound_bessel: delta must be >= 0");
    const double jn = bessel_jn(n, static_cast<double>(n) * delta / p.omega_s);
    return std::abs(jn) - p.eps * p.omega_s * static_cast<double>(m) / static_cast<double>(n);
}

double load_bound_bessel_sup(const ReducedParams& p, int m, int n) {
    p.validate();
    check_orders(m, n);
    return bessel_jn_sup(n) - p.eps * p.omega_s * static_cast<double>(m) / static_cast<double>(n);
}

LoadBounds load_bounds(const ReducedParams& p, int m, int n, double delta) {
    return {load_bound_simple(p, m, n), load_bound_bessel(p, m, n, delta), delta, false};
}

LoadBounds load_bounds_sup(const ReducedParams& p, int m, int n) {
    return {load_bound_simple(p, m, n), load_bound_bessel_sup(p, m, n),
            std::numeric_limits<double>::quiet_NaN(), true};
}

std::vector<State> IcGridPolicy::states() const {
    if (!(step > 0.0) || !(u_max >= u_min) || !(v_max >= v_min))
        throw std::invalid_argument("IcGridPolicy: malformed grid");
    const int nu = static_cast<int>(std::floor((u_max - u_min) / step + 1e-9)) + 1;
    const int nv = static_cast<int>(std::floor((v_max - v_min) / step + 1e-9)) + 1;
    std::vector<State> out;
    out.reserve(static_cast<size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            out.push_back({u_min + i * step, v_min + j * step, 0.0});
    return out;
}

bool rotation_sustained(const ReducedParams& p, int m, int n,
                        const CriticalLoadOptions& opts) {
    p.validate();
    check_orders(m, n);
    const std::vector<State> ics = opts.ic.states();
    const int workers = resolve_workers(opts.workers);

    // Probes are independent per initial condition and the result is a
    // logical OR, so completion order is irrelevant; the stop flag only
    // short-circuits work.
    std::atomic<bool> found{false};
    detail::parallel_blocks(static_cast<int>(ics.size()), workers, [&](int begin, int end) {
        for (int i = begin; i < end && !found.load(std::memory_order_relaxed); ++i) {
            const OrbitSummary s = classify_orbit(p, ics[static_cast<size_t>(i)], opts.classify);
            if (s.orbit.rotating() && s.orbit.m == m && s.orbit.n == n && s.orbit.sign == +1)
                found.store(true, std::memory_order_relaxed);
        }
    });
    return found.load();
}

CriticalLoadResult critical_load(const ReducedParams& p_base, int m, int n,
                                 std::pair<double, double> bracket0,
                                 const CriticalLoadOptions& opts) {
    check_orders(m, n);
    if (!(bracket0.first >= 0.0) || !(bracket0.second > bracket0.first))
        throw std::invalid_argument("critical_load: need 0 <= w_lo < w_hi");
    if (!(opts.w_tolerance > 0.0))
        throw std::invalid_argument("critical_load: w_tolerance must be > 0");

    CriticalLoadResult res;
    res.ic_policy = opts.ic;
    res.samples_per_probe = static_cast<int>(opts.ic.states().size());

    auto probe = [&](double w) {
        ReducedParams p = p_base;
        p.w = w;
        const bool sustained = rotation_sustained(p, m, n, opts);
        res.probes.emplace_back(w, sustained);
        return sustained;
    };

    double lo = bracket0.first;
    double hi = bracket0.second;
    if (!probe(lo))
        throw BracketError("critical_load: rotation not sustained at the lower bracket w = " +
                           std::to_string(lo));
    if (probe(hi))
        throw BracketError("critical_load: rotation still sustained at the upper bracket w = " +
                           std::to_string(hi));

    while (hi - lo > opts.w_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid))
            lo = mid;
        else
            hi = mid;
    }

    // Monotone exclusion: a sustaining load above a refuting one signals a
    // fractal sustainment boundary. Surface it and report the outermost
    // bracket instead of the (then meaningless) bisection one.
    double max_sustain = -std::numeric_limits<double>::infinity();
    double min_refute = std::numeric_limits<double>::infinity();
    for (const auto& [w, s] : res.probes) {
        if (s) max_sustain = std::max(max_sustain, w);
        else min_refute = std::min(min_refute, w);
    }
    if (max_sustain > min_refute) {
        res.monotone_violation = true;
        double outer_refute = std::numeric_limits<double>::infinity();
        for (const auto& [w, s] : res.probes)
            if (!s && w > max_sustain) outer_refute = std::min(outer_refute, w);
        lo = max_sustain;
        hi = std::isfinite(outer_refute) ? outer_refute : bracket0.second;
    }

    res.w_lo = lo;
    res.w_hi = hi;
    res.w_c = 0.5 * (lo + hi);
    return res;
}

} // namespace pinion
