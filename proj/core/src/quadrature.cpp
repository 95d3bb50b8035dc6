// SPDX-License-Identifier: Apache-2.0
#include "pinion/quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "pinion/errors.hpp"

namespace pinion {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK values).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkEstimate {
    double value;
    double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = wg[3] * fc;
    double result_kronrod = wgk[7] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += wgk[j] * fsum;
        if (j % 2 == 1) result_gauss += wg[j / 2] * fsum;
    }
    result_gauss *= half;
    result_kronrod *= half;

    const double diff = std::abs(result_kronrod - result_gauss);
    // QUADPACK's sharpened error estimate, (200 |K - G|)^{3/2}.
    double err = diff;
    if (diff != 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return {result_kronrod, err};
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts) {
    struct Interval {
        double a, b, value, error;
    };

    GkEstimate whole = gk15(f, a, b);
    std::vector<Interval> stack;
    stack.push_back({a, b, whole.value, whole.error});

    double sum = whole.value;
    double err_sum = whole.error;
    int used = 1;

    while (err_sum > std::max(opts.rel_tol * std::abs(sum), opts.abs_tol)) {
        if (used >= opts.max_intervals || stack.empty())
            throw NumericalError("integrate_adaptive: interval budget exhausted");

        // Split the interval with the largest error.
        size_t worst = 0;
        for (size_t i = 1; i < stack.size(); ++i)
            if (stack[i].error > stack[worst].error) worst = i;
        const Interval cur = stack[worst];
        stack.erase(stack.begin() + static_cast<long>(worst));

        const double mid = 0.5 * (cur.a + cur.b);
        const GkEstimate left = gk15(f, cur.a, mid);
        const GkEstimate right = gk15(f, mid, cur.b);
        ++used;

        sum += left.value + right.value - cur.value;
        err_sum += left.error + right.error - cur.error;
        stack.push_back({cur.a, mid, left.value, left.error});
        stack.push_back({mid, cur.b, right.value, right.error});
    }
    return sum;
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const SemiInfiniteOptions& opts) {
    double acc = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    int quiet_segments = 0;

    while (true) {
        const double seg = integrate_adaptive(f, lo, hi, opts.segment);
        if (!std::isfinite(seg))
            throw KernelDecayError(
                "integrate_semi_infinite: integrand is not finite on [" + std::to_string(lo) +
                ", " + std::to_string(hi) + ")");
        acc += seg;
        if (std::abs(seg) <= opts.tail_rel * std::abs(acc) && acc != 0.0) {
            if (++quiet_segments >= 2) return acc;
        } else {
            quiet_segments = 0;
        }
        if (hi >= opts.t_max)
            throw KernelDecayError(
                "integrate_semi_infinite: integrand did not decay within the truncation budget");
        lo = hi;
        hi *= 2.0;
    }
}

} // namespace pinion
