// SPDX-License-Identifier: Apache-2.0
#include "pinion/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pinion {

namespace {

constexpr double z_limit = 1e4;

// Hankel asymptotic expansion,
//   J_n(z) = sqrt(2/(pi z)) [P(n,z) cos chi - Q(n,z) sin chi],
//   chi = z - (n/2 + 1/4) pi,
// summed until terms stop decreasing. Only used where mu = 4n^2 is small
// against 8z, so truncation error is far below 1e-12.
double jn_asymptotic(int n, double z) {
    const double mu = 4.0 * static_cast<double>(n) * static_cast<double>(n);
    const double inv8z = 1.0 / (8.0 * z);

    double p = 1.0, q = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 20; ++k) {
        const double f = 2.0 * k - 1.0;
        term *= (mu - f * f) * inv8z / static_cast<double>(k);
        if (k % 2 == 1) {
            q += (k % 4 == 1) ? term : -term;
        } else {
            p += (k % 4 == 2) ? -term : term;
        }
        if (std::abs(term) < 1e-17) break;
    }

    const double chi = z - (0.5 * n + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Miller's algorithm: recur J_{k-1} = (2k/z) J_k - J_{k+1} downward from a
// trial order well above both n and z, then rescale by the normalization
// J_0(z) + 2 J_2(z) + 2 J_4(z) + ... = 1.
double jn_miller(int n, double z) {
    if (z == 0.0) return n == 0 ? 1.0 : 0.0;

    // Above the turning point k ~ z the recurrence solutions separate on an
    // Airy scale ~ z^{1/3}; this start order pushes the contamination of the
    // minimal solution below 1e-16.
    int start = static_cast<int>(std::max(static_cast<double>(n), z) +
                                 14.0 * std::cbrt(std::max(z, 1.0)) + 20.0);
    start += start % 2;  // even

    double jp = 0.0;     // J_{k+1}, arbitrary scale
    double jc = 1e-30;   // J_k
    double result = (n == start) ? jc : 0.0;
    double even_sum = 0.0;  // sum of J_k over even k in (0, start]

    for (int k = start; k > 0; --k) {
        const double jm = (2.0 * k / z) * jc - jp;  // J_{k-1}
        jp = jc;
        jc = jm;
        if (k % 2 == 0) even_sum += jp;  // jp = J_k, k even
        if (k - 1 == n) result = jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            result *= 1e-250;
            even_sum *= 1e-250;
        }
    }
    // jc now holds J_0 at the working scale.
    const double norm = jc + 2.0 * even_sum;
    return result / norm;
}

} // namespace

double bessel_jn(int n, double z) {
    if (n < 0) throw std::invalid_argument("bessel_jn: order must be >= 0");
    if (!std::isfinite(z) || std::abs(z) >= z_limit)
        throw std::invalid_argument("bessel_jn: |z| must be finite and < 1e4");

    double sign = 1.0;
    if (z < 0.0) {
        z = -z;
        if (n % 2 == 1) sign = -1.0;
    }

    // The asymptotic branch needs mu/(8z) small for rapid convergence.
    if (z >= 2000.0 && 4.0 * n * n <= 0.8 * z)
        return sign * jn_asymptotic(n, z);

    return sign * jn_miller(n, z);
}

double bessel_jn_sup(int n) {
    if (n < 0) throw std::invalid_argument("bessel_jn_sup: order must be >= 0");
    if (n == 0) return 1.0;

    // Coarse scan for the first (global) peak, then golden-section refine.
    const double lo_scan = std::max(0.5, static_cast<double>(n) * 0.5);
    const double hi_scan = static_cast<double>(n) + 10.0 + 2.0 * std::cbrt(static_cast<double>(n));
    double best_z = lo_scan;
    double best = 0.0;
    const int n_scan = 400;
    for (int i = 0; i <= n_scan; ++i) {
        const double z = lo_scan + (hi_scan - lo_scan) * i / n_scan;
        const double f = std::abs(bessel_jn(n, z));
        if (f > best) {
            best = f;
            best_z = z;
        }
    }

    const double step = (hi_scan - lo_scan) / n_scan;
    double a = std::max(lo_scan, best_z - step);
    double b = best_z + step;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = std::abs(bessel_jn(n, c));
    double fd = std::abs(bessel_jn(n, d));
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = std::abs(bessel_jn(n, c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = std::abs(bessel_jn(n, d));
        }
    }
    return std::max(fc, fd);
}

} // namespace pinion
