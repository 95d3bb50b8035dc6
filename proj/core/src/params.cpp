// SPDX-License-Identifier: Apache-2.0
#include "pinion/params.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace pinion {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

double wrap_angle(double phi) {
    double r = std::remainder(phi, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

void PhysicalParams::validate() const {
    require(finite(inertia) && inertia > 0.0, "PhysicalParams: inertia must be finite and > 0");
    require(finite(radius) && radius > 0.0, "PhysicalParams: radius must be finite and > 0");
    require(finite(wavelength) && wavelength > 0.0, "PhysicalParams: wavelength must be finite and > 0");
    require(finite(force_amp) && force_amp > 0.0, "PhysicalParams: force_amp must be finite and > 0");
    require(finite(friction) && friction >= 0.0, "PhysicalParams: friction must be finite and >= 0");
    require(finite(load_arm) && load_arm >= 0.0, "PhysicalParams: load_arm must be finite and >= 0");
    require(finite(load) && load >= 0.0, "PhysicalParams: load must be finite and >= 0");
}

void DriveParams::validate() const {
    require(finite(amplitude) && amplitude >= 0.0, "DriveParams: amplitude must be finite and >= 0");
    require(finite(omega) && omega > 0.0, "DriveParams: omega must be finite and > 0");
    require(finite(phase) && phase > -std::numbers::pi && phase <= std::numbers::pi,
            "DriveParams: phase must be finite and in (-pi, pi]");
}

void ReducedParams::validate() const {
    require(finite(eps) && eps >= 0.0, "ReducedParams: eps must be finite and >= 0");
    require(finite(w) && w >= 0.0, "ReducedParams: w must be finite and >= 0");
    require(finite(y_s) && y_s >= 0.0, "ReducedParams: y_s must be finite and >= 0");
    require(finite(omega_s) && omega_s > 0.0, "ReducedParams: omega_s must be finite and > 0");
    require(finite(phi_s) && phi_s > -std::numbers::pi && phi_s <= std::numbers::pi,
            "ReducedParams: phi_s must be finite and in (-pi, pi]");
    require(finite(T) && T > 0.0, "ReducedParams: T must be finite and > 0");
}

double ReducedParams::drive_period() const {
    return 2.0 * std::numbers::pi / omega_s;
}

void State::validate() const {
    require(finite(u) && finite(v) && finite(tau), "State: all fields must be finite");
}

ReducedParams reduce_parameters(const PhysicalParams& phys, const DriveParams& drive_in) {
    // Angles are wrapped on entry; only the canonical representative is stored.
    DriveParams drive = drive_in;
    if (std::isfinite(drive.phase)) drive.phase = wrap_angle(drive.phase);
    phys.validate();
    drive.validate();

    const double two_pi = 2.0 * std::numbers::pi;
    const double I = phys.inertia;
    const double R = phys.radius;
    const double F = phys.force_amp;

    ReducedParams p;
    p.T = std::sqrt(I * phys.wavelength / (two_pi * F * R * R));
    p.eps = p.T * phys.friction / I;
    p.w = phys.load_arm * phys.load / (R * F);
    p.omega_s = drive.omega * p.T;
    p.y_s = (drive.amplitude * drive.omega * I / (F * R * R)) *
            std::sqrt(drive.omega * drive.omega +
                      (phys.friction / I) * (phys.friction / I));
    p.phi_s = wrap_angle(drive.phase - std::atan(phys.friction / (I * drive.omega)));
    p.validate();
    return p;
}

} // namespace pinion
