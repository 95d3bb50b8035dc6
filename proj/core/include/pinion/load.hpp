// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "pinion/orbit.hpp"
#include "pinion/params.hpp"

namespace pinion {

/// Analytic upper bounds on the dimensionless load w that a rotating orbit
/// (m, n) can tolerate. The physical load bound is (R F / r) times these.
struct LoadBounds {
    double simple;       ///< 1 - eps omega_s m/n
    double bessel;       ///< |J_n(n Delta / omega_s)| - eps omega_s m/n
    double delta_used;   ///< Delta the Bessel bound was evaluated at (NaN in supremum mode)
    bool supremum_mode;  ///< Bessel factor replaced by max_z |J_n(z)|
};

/// Simple averaged bound w1 = 1 - eps omega_s m/n. A non-positive value
/// means rotation (m, n) is impossible at any load.
double load_bound_simple(const ReducedParams& p, int m, int n);

/// Sharper bound w2 = |J_n(n Delta / omega_s)| - eps omega_s m/n, with
/// Delta measured from a converged orbit. Requires n >= 1, m >= 1.
double load_bound_bessel(const ReducedParams& p, int m, int n, double delta);

/// Supremum form of the Bessel bound: max over the Bessel argument,
/// w2 = max_z |J_n(z)| - eps omega_s m/n.
double load_bound_bessel_sup(const ReducedParams& p, int m, int n);

/// Convenience: both bounds at once.
LoadBounds load_bounds(const ReducedParams& p, int m, int n, double delta);
LoadBounds load_bounds_sup(const ReducedParams& p, int m, int n);

/// Grid of initial conditions over which rotation sustainment is probed:
/// a load sustains rotation if ANY grid point classifies Rotating(m, n, +1).
struct IcGridPolicy {
    double u_min = -3.141592653589793;
    double u_max = 3.141592653589793;
    double v_min = -3.0;
    double v_max = 3.0;
    double step = 0.2;

    std::vector<State> states() const;
};

struct CriticalLoadOptions {
    IcGridPolicy ic;
    double w_tolerance = 1e-3;  ///< bisection bracket width
    ClassifyOptions classify;
    int workers = 0;            ///< 0 = PINION_WORKERS env or hardware
};

struct CriticalLoadResult {
    double w_c = 0.0;      ///< midpoint of the final bracket
    double w_lo = 0.0;     ///< rotation confirmed here
    double w_hi = 0.0;     ///< rotation refuted here
    IcGridPolicy ic_policy;
    int samples_per_probe = 0;
    std::vector<std::pair<double, bool>> probes;  ///< (w, sustained), in probe order
    bool monotone_violation = false;  ///< a sustaining w above a refuting one was seen
};

/// Probe whether any initial condition of the policy sustains
/// Rotating(m, n, +1) at the given parameters.
bool rotation_sustained(const ReducedParams& p, int m, int n,
                        const CriticalLoadOptions& opts);

/// Empirical critical load: bisect w inside bracket0 until the bracket is
/// narrower than w_tolerance, probing sustainment over the initial-condition
/// grid at every step. The w field of p_base is ignored. Throws BracketError
/// if bracket0 does not straddle (rotation at both ends, or at neither).
/// Probe history that contradicts monotone exclusion is flagged on the
/// result, and the outermost bracket is reported.
CriticalLoadResult critical_load(const ReducedParams& p_base, int m, int n,
                                 std::pair<double, double> bracket0,
                                 const CriticalLoadOptions& opts = {});

} // namespace pinion
