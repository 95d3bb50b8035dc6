// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>

#include "pinion/dynamics.hpp"
#include "pinion/params.hpp"

namespace pinion {

/// Terminal classification of a trajectory. A rotating orbit advances u by
/// 2 pi m (in the direction of `sign`) every n drive periods; (m, n) are
/// stored coprime, so the pair labels the rotation number m/n rather than
/// the bare periodicity test that detected it.
struct OrbitClass {
    enum class Kind { rotating, locked, chaotic, unclassified };

    Kind kind = Kind::unclassified;
    int m = 0;     ///< winding per n periods (>= 1 for rotating)
    int n = 0;     ///< periods per repeat (>= 1 for rotating)
    int sign = 0;  ///< +1 / -1 rotation direction, 0 otherwise
    double residual = std::numeric_limits<double>::quiet_NaN();  ///< periodicity mismatch

    bool rotating() const { return kind == Kind::rotating; }
};

const char* to_string(OrbitClass::Kind kind);

/// Steady-state measurements attached to a classification. For chaotic,
/// unclassified, or diverged runs the numeric fields are NaN.
struct OrbitSummary {
    OrbitClass orbit;
    double mean_velocity = std::numeric_limits<double>::quiet_NaN();     ///< measured over >= 10 periods
    double delta = std::numeric_limits<double>::quiet_NaN();             ///< half peak-to-peak of v over one orbit period
    double identity_residual = std::numeric_limits<double>::quiet_NaN(); ///< |-w - eps mean(v) - mean(sin u)|
    double lambda = std::numeric_limits<double>::quiet_NaN();            ///< chaos-screen exponent, when one ran
    bool diverged = false;
};

struct ClassifyOptions {
    int transient_periods = 200;  ///< drive periods allowed before the periodicity test must settle
    int test_periods = 16;        ///< consecutive confirming periods required to accept
    int n_max = 4;
    int m_max = 8;
    double tolerance = 1e-3;      ///< on both the u shift (mod 2 pi m) and v recurrence
    int steps_per_period = 1000;
    double max_step = 0.1;        ///< the per-period step is subdivided until h <= this;
                                  ///< keeps slow drives (omega_s << 1) from under-resolving
                                  ///< the unit-frequency pendulum oscillation
    double divergence_guard = 1e3;
    int budget_periods = 500;     ///< hard cap on integrated periods (search phases)

    /// Accept as soon as test_periods consecutive periods confirm the same
    /// (n, m); transient_periods is then only the cap. With false, the full
    /// transient is integrated first and the decision made from the
    /// trailing test window only.
    bool early_accept = true;

    double chaos_threshold = 1e-3;      ///< lambda above this marks Chaotic
    double chaos_fast_threshold = 2e-2; ///< early Chaotic exit level (early_accept mode)
    int chaos_confirm_periods = 64;     ///< periods of tangent history before an early Chaotic exit
    int min_measure_periods = 10;       ///< mean-velocity measurement window (rounded up to orbit periods)
};

/// Integrate from s0 and classify the steady state: rotating (u advances by
/// 2 pi m every n drive periods with v periodic), locked (periodic, no net
/// winding), chaotic (no periodicity found and positive largest Lyapunov
/// exponent), or unclassified. The smallest (n, then m) satisfying the
/// periodicity test within tolerance wins. Divergence is reported through
/// the summary, never thrown.
OrbitSummary classify_orbit(const ReducedParams& p, const State& s0,
                            const ClassifyOptions& opts = {});

struct MeanVelocity {
    double reduced;   ///< sign * m omega_s / n
    double physical;  ///< sign * (m/n) * lambda omega_p / (2 pi)  [m/s]
};

/// Quantized mean velocity of a rotating classification; the physical value
/// needs the corrugation wavelength (omega_p = omega_s / T). Rejects
/// non-rotating classifications.
MeanVelocity mean_velocity(const OrbitClass& c, const ReducedParams& p, double wavelength);

/// Residual |-w - eps mean(v) - mean(sin u)| of the period-averaged
/// equation of motion, with means taken by the trapezoid rule. The
/// trajectory must span an integer number (>= 1) of drive periods.
double check_averaging_identity(const Trajectory& traj, const ReducedParams& p);

/// Velocity-oscillation amplitude Delta = (max v - min v)/2 over one orbit
/// period, with parabolic refinement of the sampled extrema. The trajectory
/// must wind (|net u advance| >= 2 pi - tolerance); non-rotating input is
/// rejected.
double measure_delta(const Trajectory& traj, const ReducedParams& p);

} // namespace pinion
