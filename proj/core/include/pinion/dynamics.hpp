// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "pinion/errors.hpp"
#include "pinion/params.hpp"

namespace pinion {

/// Right-hand side of the reduced equation of motion,
///   du/dtau = v
///   dv/dtau = -sin u - eps v - w + y_s cos(omega_s tau + phi_s).
struct Derivs {
    double du;
    double dv;
};

/// Evaluate the reduced RHS. Rejects non-finite state with std::invalid_argument.
Derivs reduced_rhs(const State& s, const ReducedParams& p);

namespace detail {

// Unchecked RHS for the hot loops.
inline Derivs rhs(double u, double v, double tau, const ReducedParams& p) {
    return {v, -std::sin(u) - p.eps * v - p.w + p.y_s * std::cos(p.omega_s * tau + p.phi_s)};
}

// One classical 4th-order step of size h starting at (u, v, tau).
// tau is passed explicitly so callers can keep it free of accumulation drift.
inline void rk4_step(double& u, double& v, double tau, double h, const ReducedParams& p) {
    const Derivs k1 = rhs(u, v, tau, p);
    const Derivs k2 = rhs(u + 0.5 * h * k1.du, v + 0.5 * h * k1.dv, tau + 0.5 * h, p);
    const Derivs k3 = rhs(u + 0.5 * h * k2.du, v + 0.5 * h * k2.dv, tau + 0.5 * h, p);
    const Derivs k4 = rhs(u + h * k3.du, v + h * k3.dv, tau + h, p);
    u += h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
    v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
}

} // namespace detail

struct IntegrateOptions {
    int steps_per_period = 1000;      ///< RK4 steps per drive period (>= 16)
    double divergence_guard = 1e3;    ///< abort when |v| exceeds this
};

/// Sampled orbit of the reduced flow at uniform spacing h, with the
/// parameters it was generated from. Samples are exactly the integrator
/// outputs: re-applying one RK4 step to samples[k] reproduces samples[k+1]
/// bit for bit.
struct Trajectory {
    std::vector<State> samples;
    double h = 0.0;
    ReducedParams params;

    double duration() const {
        return samples.empty() ? 0.0 : samples.back().tau - samples.front().tau;
    }
};

/// Step size used by the fixed-step integrator: one drive period divided
/// into steps_per_period pieces. With y_s = 0 there is no drive period and
/// the small-oscillation period 2 pi of the pendulum is used instead.
double integration_step(const ReducedParams& p, int steps_per_period);

/// Integrate the reduced equation from s0 to at least tau_end with the
/// classical fixed-step 4th-order scheme. Deterministic: identical inputs
/// give bit-identical trajectories. Throws DivergenceError when |v| exceeds
/// the guard; u is never wrapped (the winding number is the observable).
Trajectory integrate(const State& s0, const ReducedParams& p, double tau_end,
                     const IntegrateOptions& opts = {});

/// A point of the physical motion x = R theta of the pinion rim.
struct PhysicalState {
    double x = 0.0;
    double xdot = 0.0;
    double t = 0.0;
};

struct PhysicalTrajectory {
    std::vector<PhysicalState> samples;
    double h = 0.0;  ///< time step [s]
    PhysicalParams phys;
    DriveParams drive;
};

/// Rack position y(t) = y_p cos(omega_p t + phi_p).
double rack_position(const DriveParams& d, double t);
double rack_velocity(const DriveParams& d, double t);

/// Integrate the equation of motion directly in physical variables,
///   (I/R) x'' = -R F sin(2 pi (x - y)/lambda) - (zeta/R) x' - r W,
/// with the rack driven harmonically. Step: one drive period over
/// steps_per_period (2 pi T when y_p = 0). Used as the oracle for the
/// parameter reduction.
PhysicalTrajectory integrate_physical(const PhysicalParams& phys, const DriveParams& drive,
                                      double x0, double xdot0, double t_end,
                                      const IntegrateOptions& opts = {});

/// Map a physical sample onto the reduced phase plane:
///   u = 2 pi (x - y)/lambda,  v = (2 pi T/lambda)(x' - y'),  tau = t/T.
State to_reduced(const PhysicalState& s, const PhysicalParams& phys, const DriveParams& drive);

} // namespace pinion
