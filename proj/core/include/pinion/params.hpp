// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace pinion {

/// Wrap an angle to the half-open interval (-pi, pi].
double wrap_angle(double phi);

/// Physical description of the gear: a cylindrical pinion held above a
/// corrugated rack, coupled only through the lateral fluctuation force,
/// working against a dead load hung on a torque arm.
struct PhysicalParams {
    double inertia = 1.0;     ///< I,  moment of inertia about the pinion axis [kg m^2]
    double radius = 1.0;      ///< R,  pinion radius [m]
    double friction = 0.0;    ///< zeta, rotational friction coefficient [N m s]
    double wavelength = 1.0;  ///< lambda, corrugation wavelength [m]
    double force_amp = 1.0;   ///< F,  amplitude of the lateral force [N]
    double load_arm = 0.0;    ///< r,  torque arm of the external load [m]
    double load = 0.0;        ///< W,  external load [N]

    /// Throws std::invalid_argument unless
    /// I > 0, R > 0, lambda > 0, F > 0, zeta >= 0, r >= 0, W >= 0 and all finite.
    void validate() const;
};

/// Harmonic motion of the rack, y(t) = y_p cos(omega_p t + phi_p).
struct DriveParams {
    double amplitude = 0.0;  ///< y_p [m]
    double omega = 1.0;      ///< omega_p [1/s]
    double phase = 0.0;      ///< phi_p [rad], stored wrapped to (-pi, pi]

    void validate() const;  ///< requires y_p >= 0, omega_p > 0, all finite
};

/// The five dimensionless parameters of the reduced equation of motion
///   u'' = -sin u - eps u' - w + y_s cos(omega_s tau + phi_s),
/// together with the time unit T used in the rescaling t = T tau.
struct ReducedParams {
    double eps = 0.0;      ///< friction relative to inertia
    double w = 0.0;        ///< dimensionless load
    double y_s = 0.0;      ///< dimensionless drive amplitude
    double omega_s = 1.0;  ///< dimensionless drive frequency
    double phi_s = 0.0;    ///< drive phase [rad], in (-pi, pi]
    double T = 1.0;        ///< time unit [s]; irrelevant for purely reduced runs

    void validate() const;

    /// Drive period 2 pi / omega_s in reduced time.
    double drive_period() const;
};

/// A point of the reduced flow: u = 2 pi (x - y) / lambda, v = du/dtau.
struct State {
    double u = 0.0;
    double v = 0.0;
    double tau = 0.0;

    void validate() const;  ///< all fields finite
};

/// Collapse the physical description onto the five reduced parameters:
///   T       = sqrt(I lambda / (2 pi F R^2))
///   eps     = T zeta / I
///   w       = r W / (R F)
///   omega_s = omega_p T
///   y_s     = (y_p omega_p I / (F R^2)) sqrt(omega_p^2 + zeta^2 / I^2)
///   phi_s   = phi_p - atan(zeta / (I omega_p)),  wrapped to (-pi, pi].
///
/// Throws std::invalid_argument on invalid inputs (omega_p <= 0 in
/// particular leaves phi_s undefined).
ReducedParams reduce_parameters(const PhysicalParams& phys, const DriveParams& drive);

} // namespace pinion
