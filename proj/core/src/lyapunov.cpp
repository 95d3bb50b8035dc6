// SPDX-License-Identifier: Apache-2.0
#include "pinion/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

#include "pinion/errors.hpp"

namespace pinion {

LyapunovResult largest_lyapunov(const ReducedParams& p, const State& s0,
                                const LyapunovOptions& opts) {
    p.validate();
    s0.validate();
    if (!(opts.horizon >= 1000.0))
        throw std::invalid_argument("largest_lyapunov: horizon must be >= 1000 reduced time units");
    if (opts.steps_per_period < 16)
        throw std::invalid_argument("largest_lyapunov: steps_per_period must be >= 16");

    if (!(opts.max_step > 0.0))
        throw std::invalid_argument("largest_lyapunov: max_step must be > 0");
    const double interval = opts.renorm_interval > 0.0 ? opts.renorm_interval : p.drive_period();
    const int subdiv = std::max(
        1, static_cast<int>(std::ceil(interval / opts.steps_per_period / opts.max_step)));
    const int steps_per_interval = opts.steps_per_period * subdiv;
    const double h = interval / steps_per_interval;
    const auto n_intervals = static_cast<long>(std::ceil(opts.horizon / interval - 1e-12));

    double u = s0.u, v = s0.v;
    const double tnorm = std::hypot(opts.tangent_u, opts.tangent_v);
    if (!(tnorm > 0.0))
        throw std::invalid_argument("largest_lyapunov: initial tangent must be nonzero");
    double du = opts.tangent_u / tnorm;
    double dv = opts.tangent_v / tnorm;

    LyapunovResult res;
    res.renorm_interval = interval;
    res.history.reserve(static_cast<size_t>(n_intervals));

    double log_sum = 0.0;
    long step = 0;
    for (long k = 0; k < n_intervals; ++k) {
        for (int i = 0; i < steps_per_interval; ++i, ++step) {
            const double tau = s0.tau + static_cast<double>(step) * h;
            detail::tangent_rk4_step(u, v, du, dv, tau, h, p);
            if (!(std::abs(v) <= opts.divergence_guard))
                throw DivergenceError(tau + h, v, opts.divergence_guard);
        }
        const double g = std::hypot(du, dv);
        log_sum += std::log(g);
        du /= g;
        dv /= g;
        res.history.push_back(log_sum / (static_cast<double>(k + 1) * interval));
    }

    res.horizon = static_cast<double>(n_intervals) * interval;
    res.lambda_max = res.history.back();
    return res;
}

} // namespace pinion
