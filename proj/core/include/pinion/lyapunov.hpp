// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "pinion/dynamics.hpp"
#include "pinion/params.hpp"

namespace pinion {

namespace detail {

// One RK4 step of the reduced flow jointly with its exact variational
// system; the tangent (du, dv) sees the Jacobian rows (0, 1; -cos u, -eps)
// evaluated at the base-state stages. The base components advance exactly
// as in rk4_step.
inline void tangent_rk4_step(double& u, double& v, double& du, double& dv, double tau,
                             double h, const ReducedParams& p) {
    const Derivs k1 = rhs(u, v, tau, p);
    const double t1u = dv;
    const double t1v = -std::cos(u) * du - p.eps * dv;

    const double u2 = u + 0.5 * h * k1.du, v2 = v + 0.5 * h * k1.dv;
    const Derivs k2 = rhs(u2, v2, tau + 0.5 * h, p);
    const double du2 = du + 0.5 * h * t1u, dv2 = dv + 0.5 * h * t1v;
    const double t2u = dv2;
    const double t2v = -std::cos(u2) * du2 - p.eps * dv2;

    const double u3 = u + 0.5 * h * k2.du, v3 = v + 0.5 * h * k2.dv;
    const Derivs k3 = rhs(u3, v3, tau + 0.5 * h, p);
    const double du3 = du + 0.5 * h * t2u, dv3 = dv + 0.5 * h * t2v;
    const double t3u = dv3;
    const double t3v = -std::cos(u3) * du3 - p.eps * dv3;

    const double u4 = u + h * k3.du, v4 = v + h * k3.dv;
    const Derivs k4 = rhs(u4, v4, tau + h, p);
    const double du4 = du + h * t3u, dv4 = dv + h * t3v;
    const double t4u = dv4;
    const double t4v = -std::cos(u4) * du4 - p.eps * dv4;

    u += h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
    v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    du += h / 6.0 * (t1u + 2.0 * t2u + 2.0 * t3u + t4u);
    dv += h / 6.0 * (t1v + 2.0 * t2v + 2.0 * t3v + t4v);
}

} // namespace detail

struct LyapunovOptions {
    double horizon = 1e4;          ///< total reduced time (>= 1000)
    double renorm_interval = 0.0;  ///< 0 = one drive period
    int steps_per_period = 1000;   ///< RK4 steps per renorm interval
    double max_step = 0.1;         ///< subdivide until h <= this
    double divergence_guard = 1e3;
    double tangent_u = 1.0;        ///< initial tangent direction (normalized internally)
    double tangent_v = 0.0;
};

struct LyapunovResult {
    double lambda_max = 0.0;       ///< final running estimate [1/reduced time]
    double horizon = 0.0;
    double renorm_interval = 0.0;
    std::vector<double> history;   ///< running estimate after each renormalization
};

/// Largest Lyapunov exponent of the reduced flow: the tangent vector is
/// propagated with the exact variational equations, renormalized every
/// interval, and the log growth averaged. Deterministic. Throws
/// DivergenceError if the base trajectory diverges.
LyapunovResult largest_lyapunov(const ReducedParams& p, const State& s0,
                                const LyapunovOptions& opts = {});

} // namespace pinion
