// SPDX-License-Identifier: Apache-2.0
#include "pinion/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pinion/lyapunov.hpp"

namespace pinion {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Refine a sampled extremum with the parabola through three neighbors.
// Indices wrap (the window spans whole periods).
double refine_extremum(const std::vector<double>& v, size_t i) {
    const size_t n = v.size() - 1;  // v[0] and v[n] are one period apart
    const double fm = v[(i + n - 1) % n];
    const double f0 = v[i % n];
    const double fp = v[(i + 1) % n];
    const double denom = fp - 2.0 * f0 + fm;
    if (denom == 0.0) return f0;
    const double num = fp - fm;
    return f0 - num * num / (8.0 * denom);
}

// Half peak-to-peak of v over the window, refined.
double half_peak_to_peak(const std::vector<double>& v) {
    size_t imax = 0, imin = 0;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[imax]) imax = i;
        if (v[i] < v[imin]) imin = i;
    }
    const double vmax = std::max(refine_extremum(v, imax), v[imax]);
    const double vmin = std::min(refine_extremum(v, imin), v[imin]);
    return 0.5 * (vmax - vmin);
}

struct BoundaryState {
    double u;
    double v;
};

// Streak of consecutive period boundaries confirming the same (n, m).
struct Streak {
    int count = 0;
    long m = 0;  // signed winding per n periods
    double max_residual = 0.0;
};

} // namespace

const char* to_string(OrbitClass::Kind kind) {
    switch (kind) {
        case OrbitClass::Kind::rotating: return "Rotating";
        case OrbitClass::Kind::locked: return "Locked";
        case OrbitClass::Kind::chaotic: return "Chaotic";
        case OrbitClass::Kind::unclassified: return "Unclassified";
    }
    return "Unclassified";
}

OrbitSummary classify_orbit(const ReducedParams& p, const State& s0,
                            const ClassifyOptions& opts) {
    p.validate();
    s0.validate();
    if (opts.transient_periods < 1 || opts.test_periods < 2 || opts.n_max < 1 ||
        opts.m_max < 0 || !(opts.tolerance > 0.0) || opts.steps_per_period < 16 ||
        !(opts.max_step > 0.0))
        throw std::invalid_argument("classify_orbit: invalid options");

    const double period = p.drive_period();
    // Subdivide until the step also resolves the pendulum's unit frequency;
    // slow drives (omega_s << 1) would otherwise leave h of order the
    // oscillation itself.
    const int subdiv = std::max(
        1, static_cast<int>(std::ceil(period / opts.steps_per_period / opts.max_step)));
    const int steps_per_period = opts.steps_per_period * subdiv;
    const double h = period / steps_per_period;

    // In strict mode the whole test window lies past the transient, so the
    // search must reach transient + test + n_max boundaries.
    const int max_search =
        std::min(opts.transient_periods + opts.test_periods +
                     (opts.early_accept ? 0 : opts.n_max),
                 opts.budget_periods);
    // Pairs (base, base + n) are only tested once `base` has cleared the
    // transient gate; with early acceptance the gate is zero and
    // transient_periods only caps the search.
    const int gate_base = opts.early_accept ? 0 : opts.transient_periods;

    OrbitSummary out;

    // History of period-boundary states; index k is the state after k periods.
    std::vector<BoundaryState> hist;
    hist.reserve(static_cast<size_t>(opts.budget_periods) + 16);
    hist.push_back({s0.u, s0.v});

    std::vector<Streak> streaks(static_cast<size_t>(opts.n_max) + 1);

    // Tangent bookkeeping for the chaos screen, running alongside the state
    // from boundary `tangent_start` on. It never feeds back into the base
    // trajectory, so classifications are independent of it.
    const int tangent_start = opts.early_accept ? 8 : opts.transient_periods / 2;
    double du = 1.0, dv = 0.0;
    double log_sum = 0.0;
    int tangent_periods = 0;

    double u = s0.u, v = s0.v;
    long step = 0;
    int boundary = 0;     // drive periods integrated so far
    int search_from = 0;  // first boundary of the current search window

    auto integrate_one_period = [&](bool with_tangent, Trajectory* record = nullptr) -> bool {
        for (int i = 0; i < steps_per_period; ++i, ++step) {
            const double tau = s0.tau + static_cast<double>(step) * h;
            if (with_tangent)
                detail::tangent_rk4_step(u, v, du, dv, tau, h, p);
            else
                detail::rk4_step(u, v, tau, h, p);
            if (!(std::abs(v) <= opts.divergence_guard)) return false;
            if (record)
                record->samples.push_back({u, v, s0.tau + static_cast<double>(step) * h + h});
        }
        ++boundary;
        hist.push_back({u, v});
        return true;
    };

    // The search runs until the budget is exhausted. An acceptance is only
    // final once the measured mean velocity matches its quantized value;
    // otherwise (a transient masquerading as periodic) the search resumes.
    while (true) {
        int accepted_n = 0;
        long accepted_m = 0;
        double accepted_residual = 0.0;

        while (boundary - search_from < max_search && accepted_n == 0 &&
               boundary < opts.budget_periods) {
            const bool tangent_on = boundary >= tangent_start;
            if (!integrate_one_period(tangent_on)) {
                out.diverged = true;
                return out;
            }
            if (tangent_on) {
                const double g = std::hypot(du, dv);
                log_sum += std::log(g);
                du /= g;
                dv /= g;
                ++tangent_periods;
            }

            // Periodicity test against each lag n, minimal n first.
            for (int n = 1; n <= opts.n_max && n <= boundary; ++n) {
                if (boundary - n < search_from + gate_base) continue;
                const BoundaryState& now = hist[static_cast<size_t>(boundary)];
                const BoundaryState& past = hist[static_cast<size_t>(boundary - n)];
                const double dU = now.u - past.u;
                const long m = std::lround(dU / two_pi);
                const double res = std::max(std::abs(dU - two_pi * static_cast<double>(m)),
                                            std::abs(now.v - past.v));
                Streak& s = streaks[static_cast<size_t>(n)];
                if (res < opts.tolerance && std::labs(m) <= opts.m_max) {
                    if (s.count > 0 && s.m == m) {
                        ++s.count;
                        s.max_residual = std::max(s.max_residual, res);
                    } else {
                        s.count = 1;
                        s.m = m;
                        s.max_residual = res;
                    }
                } else {
                    s.count = 0;
                }
            }

            for (int n = 1; n <= opts.n_max; ++n) {
                if (streaks[static_cast<size_t>(n)].count >= opts.test_periods) {
                    accepted_n = n;
                    accepted_m = streaks[static_cast<size_t>(n)].m;
                    accepted_residual = streaks[static_cast<size_t>(n)].max_residual;
                    break;
                }
            }

            // Early chaotic exit: clearly positive tangent growth and no
            // test streak making progress.
            if (opts.early_accept && accepted_n == 0 &&
                tangent_periods >= opts.chaos_confirm_periods) {
                const double lambda = log_sum / (tangent_periods * period);
                const bool streak_active = std::any_of(
                    streaks.begin() + 1, streaks.end(),
                    [](const Streak& s) { return s.count >= 3; });
                if (lambda > opts.chaos_fast_threshold && !streak_active) {
                    out.orbit.kind = OrbitClass::Kind::chaotic;
                    out.lambda = lambda;
                    return out;
                }
            }
        }

        if (accepted_n == 0) {
            // No periodic match: decide chaotic vs unclassified from the
            // tangent average, with the threshold floored by the statistical
            // resolution of the horizon actually integrated.
            if (tangent_periods > 0) {
                const double horizon = tangent_periods * period;
                const double lambda = log_sum / horizon;
                out.lambda = lambda;
                if (lambda > std::max(opts.chaos_threshold, 3.0 / horizon)) {
                    out.orbit.kind = OrbitClass::Kind::chaotic;
                    return out;
                }
            }
            out.orbit.kind = OrbitClass::Kind::unclassified;
            return out;
        }

        // Measurement pass: the first n_orbit periods are recorded for the
        // averaging identity and Delta; the full window (>= 10 periods,
        // rounded up to whole orbit periods) gives the mean velocity.
        const int n_orbit = accepted_n;
        const int measure_periods =
            n_orbit * ((opts.min_measure_periods + n_orbit - 1) / n_orbit);

        Trajectory window;
        window.h = h;
        window.params = p;
        window.samples.reserve(static_cast<size_t>(n_orbit) * steps_per_period + 1);
        window.samples.push_back({u, v, s0.tau + static_cast<double>(step) * h});

        const double u_start = u;
        for (int k = 0; k < measure_periods; ++k) {
            if (!integrate_one_period(false, k < n_orbit ? &window : nullptr)) {
                out.diverged = true;
                return out;
            }
        }

        const double mean_v =
            (u - u_start) / (static_cast<double>(measure_periods) * period);
        const double quantized =
            static_cast<double>(accepted_m) * p.omega_s / static_cast<double>(n_orbit);

        if (std::abs(mean_v - quantized) <= opts.tolerance) {
            if (accepted_m == 0) {
                out.orbit.kind = OrbitClass::Kind::locked;
            } else {
                const long g = std::gcd(std::labs(accepted_m), static_cast<long>(n_orbit));
                out.orbit.kind = OrbitClass::Kind::rotating;
                out.orbit.m = static_cast<int>(std::labs(accepted_m) / g);
                out.orbit.n = static_cast<int>(n_orbit / g);
                out.orbit.sign = accepted_m > 0 ? 1 : -1;
            }
            out.orbit.residual = accepted_residual;
            out.mean_velocity = mean_v;
            out.identity_residual = check_averaging_identity(window, p);
            std::vector<double> vs;
            vs.reserve(window.samples.size());
            for (const State& s : window.samples) vs.push_back(s.v);
            out.delta = half_peak_to_peak(vs);
            return out;
        }

        // Mean velocity contradicts the accepted label: the window was a
        // converging transient. Resume searching from the current state.
        for (Streak& s : streaks) s = Streak{};
        search_from = boundary;
        if (boundary >= opts.budget_periods) {
            out.orbit.kind = OrbitClass::Kind::unclassified;
            return out;
        }
    }
}

MeanVelocity mean_velocity(const OrbitClass& c, const ReducedParams& p, double wavelength) {
    if (!c.rotating())
        throw std::invalid_argument("mean_velocity: classification is not rotating");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("mean_velocity: wavelength must be > 0");
    p.validate();
    const double ratio = static_cast<double>(c.sign) * c.m / c.n;
    const double omega_p = p.omega_s / p.T;
    return {ratio * p.omega_s, ratio * wavelength * omega_p / two_pi};
}

double check_averaging_identity(const Trajectory& traj, const ReducedParams& p) {
    p.validate();
    if (traj.samples.size() < 2 || !(traj.h > 0.0))
        throw std::invalid_argument("check_averaging_identity: empty trajectory");

    const double period = p.drive_period();
    const double duration = traj.duration();
    const double k_real = duration / period;
    const long k = std::lround(k_real);
    if (k < 1 || std::abs(k_real - static_cast<double>(k)) > 1e-6 * k_real)
        throw std::invalid_argument(
            "check_averaging_identity: trajectory must span an integer number (>= 1) of drive periods");

    const size_t n = traj.samples.size();
    double sum_v = 0.5 * (traj.samples.front().v + traj.samples.back().v);
    double sum_sin = 0.5 * (std::sin(traj.samples.front().u) + std::sin(traj.samples.back().u));
    for (size_t i = 1; i + 1 < n; ++i) {
        sum_v += traj.samples[i].v;
        sum_sin += std::sin(traj.samples[i].u);
    }
    const double mean_v = sum_v / static_cast<double>(n - 1);
    const double mean_sin = sum_sin / static_cast<double>(n - 1);
    return std::abs(-p.w - p.eps * mean_v - mean_sin);
}

double measure_delta(const Trajectory& traj, const ReducedParams& p) {
    p.validate();
    if (traj.samples.size() < 4)
        throw std::invalid_argument("measure_delta: trajectory too short");
    const double winding = traj.samples.back().u - traj.samples.front().u;
    if (std::abs(winding) < two_pi - 1e-3)
        throw std::invalid_argument("measure_delta: trajectory does not rotate");

    std::vector<double> vs;
    vs.reserve(traj.samples.size());
    for (const State& s : traj.samples) vs.push_back(s.v);
    return half_peak_to_peak(vs);
}

} // namespace pinion
