// SPDX-License-Identifier: Apache-2.0
#include "pinion/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pinion {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

Derivs reduced_rhs(const State& s, const ReducedParams& p) {
    s.validate();
    p.validate();
    return detail::rhs(s.u, s.v, s.tau, p);
}

double integration_step(const ReducedParams& p, int steps_per_period) {
    if (steps_per_period < 16)
        throw std::invalid_argument("integrate: steps_per_period must be >= 16");
    const double period = (p.y_s == 0.0) ? two_pi : p.drive_period();
    return period / steps_per_period;
}

Trajectory integrate(const State& s0, const ReducedParams& p, double tau_end,
                     const IntegrateOptions& opts) {
    s0.validate();
    p.validate();
    if (!(tau_end > s0.tau))
        throw std::invalid_argument("integrate: tau_end must exceed s0.tau");

    const double h = integration_step(p, opts.steps_per_period);
    const auto n_steps = static_cast<long>(std::ceil((tau_end - s0.tau) / h - 1e-12));

    Trajectory traj;
    traj.h = h;
    traj.params = p;
    traj.samples.reserve(static_cast<size_t>(n_steps) + 1);
    traj.samples.push_back(s0);

    double u = s0.u;
    double v = s0.v;
    for (long k = 0; k < n_steps; ++k) {
        const double tau = s0.tau + static_cast<double>(k) * h;
        detail::rk4_step(u, v, tau, h, p);
        if (!(std::abs(v) <= opts.divergence_guard))
            throw DivergenceError(tau + h, v, opts.divergence_guard);
        traj.samples.push_back({u, v, s0.tau + static_cast<double>(k + 1) * h});
    }
    return traj;
}

double rack_position(const DriveParams& d, double t) {
    return d.amplitude * std::cos(d.omega * t + d.phase);
}

double rack_velocity(const DriveParams& d, double t) {
    return -d.amplitude * d.omega * std::sin(d.omega * t + d.phase);
}

namespace {

struct PhysDerivs {
    double dx;
    double dv;
};

// x'' = -(R^2 F / I) sin(2 pi (x - y)/lambda) - (zeta/I) x' - r W R / I
inline PhysDerivs phys_rhs(double x, double xdot, double t, const PhysicalParams& g,
                           const DriveParams& d) {
    const double y = rack_position(d, t);
    const double acc = -(g.radius * g.radius * g.force_amp / g.inertia) *
                           std::sin(two_pi * (x - y) / g.wavelength) -
                       (g.friction / g.inertia) * xdot -
                       g.load_arm * g.load * g.radius / g.inertia;
    return {xdot, acc};
}

inline void phys_rk4_step(double& x, double& xdot, double t, double h,
                          const PhysicalParams& g, const DriveParams& d) {
    const PhysDerivs k1 = phys_rhs(x, xdot, t, g, d);
    const PhysDerivs k2 = phys_rhs(x + 0.5 * h * k1.dx, xdot + 0.5 * h * k1.dv, t + 0.5 * h, g, d);
    const PhysDerivs k3 = phys_rhs(x + 0.5 * h * k2.dx, xdot + 0.5 * h * k2.dv, t + 0.5 * h, g, d);
    const PhysDerivs k4 = phys_rhs(x + h * k3.dx, xdot + h * k3.dv, t + h, g, d);
    x += h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    xdot += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
}

} // namespace

PhysicalTrajectory integrate_physical(const PhysicalParams& phys, const DriveParams& drive_in,
                                      double x0, double xdot0, double t_end,
                                      const IntegrateOptions& opts) {
    DriveParams drive = drive_in;
    if (std::isfinite(drive.phase)) drive.phase = wrap_angle(drive.phase);
    phys.validate();
    drive.validate();
    if (!std::isfinite(x0) || !std::isfinite(xdot0))
        throw std::invalid_argument("integrate_physical: initial state must be finite");
    if (!(t_end > 0.0))
        throw std::invalid_argument("integrate_physical: t_end must be > 0");
    if (opts.steps_per_period < 16)
        throw std::invalid_argument("integrate_physical: steps_per_period must be >= 16");

    const ReducedParams red = reduce_parameters(phys, drive);
    const double period = (drive.amplitude == 0.0) ? two_pi * red.T : two_pi / drive.omega;
    const double h = period / opts.steps_per_period;
    const auto n_steps = static_cast<long>(std::ceil(t_end / h - 1e-12));

    // The divergence guard is specified on the reduced velocity; convert it.
    const double v_scale = two_pi * red.T / phys.wavelength;

    PhysicalTrajectory traj;
    traj.h = h;
    traj.phys = phys;
    traj.drive = drive;
    traj.samples.reserve(static_cast<size_t>(n_steps) + 1);
    traj.samples.push_back({x0, xdot0, 0.0});

    double x = x0;
    double xdot = xdot0;
    for (long k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * h;
        phys_rk4_step(x, xdot, t, h, phys, drive);
        const double t_next = static_cast<double>(k + 1) * h;
        const double v_red = v_scale * (xdot - rack_velocity(drive, t_next));
        if (!(std::abs(v_red) <= opts.divergence_guard))
            throw DivergenceError(t_next / red.T, v_red, opts.divergence_guard);
        traj.samples.push_back({x, xdot, t_next});
    }
    return traj;
}

State to_reduced(const PhysicalState& s, const PhysicalParams& phys, const DriveParams& drive_in) {
    DriveParams drive = drive_in;
    if (std::isfinite(drive.phase)) drive.phase = wrap_angle(drive.phase);
    const ReducedParams red = reduce_parameters(phys, drive);
    const double y = rack_position(drive, s.t);
    const double ydot = rack_velocity(drive, s.t);
    return {two_pi * (s.x - y) / phys.wavelength,
            (two_pi * red.T / phys.wavelength) * (s.xdot - ydot),
            s.t / red.T};
}

} // namespace pinion
