// SPDX-License-Identifier: Apache-2.0
#include "pinion/force.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pinion/errors.hpp"
#include "pinion/quadrature.hpp"

namespace pinion {

void RackPinionGeometry::validate() const {
    auto pos = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!pos(length) || !pos(radius) || !pos(a1) || !pos(a2) || !pos(wavelength) || !pos(gap))
        throw std::invalid_argument("RackPinionGeometry: all fields must be finite and > 0");
}

std::vector<std::string> RackPinionGeometry::warnings() const {
    std::vector<std::string> w;
    if (a1 > 0.1 * gap)
        w.push_back("corrugation amplitude a1 is not small against the gap (a1/H = " +
                    std::to_string(a1 / gap) + ")");
    if (a2 > 0.1 * gap)
        w.push_back("corrugation amplitude a2 is not small against the gap (a2/H = " +
                    std::to_string(a2 / gap) + ")");
    if (!(gap < radius))
        w.push_back("gap is not smaller than the pinion radius (H/R = " +
                    std::to_string(gap / radius) + "); proximity approximation unreliable");
    return w;
}

ForceKernel unit_kernel() {
    return {[](double) { return 1.0; }, "unit", "builtin"};
}

ForceKernel toy_kernel() {
    return {[](double u) {
                const double x = 2.0 * std::numbers::pi * u;
                return (1.0 + x) * std::exp(-x);
            },
            "toy", "builtin"};
}

std::vector<ForceKernel> builtin_kernels() { return {unit_kernel(), toy_kernel()}; }

double gap_integral(double gap_over_wavelength, const ForceKernel& kernel) {
    if (!(gap_over_wavelength > 0.0) || !std::isfinite(gap_over_wavelength))
        throw std::invalid_argument("gap_integral: H/lambda must be finite and > 0");
    if (!kernel.eval) throw std::invalid_argument("gap_integral: kernel has no evaluator");

    // s = 1 + t^2 turns ds s^-5 (s-1)^-1/2 into 2 dt (1 + t^2)^-5, removing
    // the endpoint singularity exactly.
    const double hw = gap_over_wavelength;
    auto integrand = [&kernel, hw](double t) {
        const double s = 1.0 + t * t;
        const double s2 = s * s;
        return 2.0 / (s2 * s2 * s) * kernel.eval(hw * s);
    };

    SemiInfiniteOptions opts;
    opts.segment.rel_tol = 1e-9;
    opts.tail_rel = 1e-12;
    return integrate_semi_infinite(integrand, opts);
}

ForceResult force_amplitude(const RackPinionGeometry& g, const ForceKernel& kernel) {
    g.validate();

    ForceResult res;
    res.warnings = g.warnings();
    // The adaptive integral depends on H/lambda and the kernel only, so the
    // linear scalings in a1, a2, L and the square root in R are exact.
    res.integral = gap_integral(g.gap / g.wavelength, kernel);
    res.prefactor = std::numbers::pi * std::sqrt(2.0) * hbar_c * g.a1 * g.a2 * g.length *
                    std::sqrt(g.radius) / (g.wavelength * std::pow(g.gap, 4.5));
    res.force = res.prefactor * res.integral;
    return res;
}

namespace {

// Fritsch-Carlson monotone cubic Hermite slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    std::vector<double> d(n - 1), m(n);
    for (size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);

    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
            const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    // Clamp the endpoint slopes (Fritsch-Carlson boundary treatment).
    auto clamp_end = [](double& mi, double di) {
        if (mi * di <= 0.0) mi = 0.0;
        else if (std::abs(mi) > 3.0 * std::abs(di)) mi = 3.0 * di;
    };
    clamp_end(m[0], d[0]);
    clamp_end(m[n - 1], d[n - 2]);
    return m;
}

struct PchipTable {
    std::vector<double> x, y, slope;
    double tail_rate;  // J(u > x_back) = y_back * exp(tail_rate * (u - x_back)), rate <= 0

    double operator()(double u) const {
        if (u <= x.front()) return y.front();
        if (u >= x.back()) return y.back() * std::exp(tail_rate * (u - x.back()));
        const auto it = std::upper_bound(x.begin(), x.end(), u);
        const size_t i = static_cast<size_t>(it - x.begin()) - 1;
        const double hstep = x[i + 1] - x[i];
        const double t = (u - x[i]) / hstep;
        const double t2 = t * t, t3 = t2 * t;
        return (2.0 * t3 - 3.0 * t2 + 1.0) * y[i] + (t3 - 2.0 * t2 + t) * hstep * slope[i] +
               (-2.0 * t3 + 3.0 * t2) * y[i + 1] + (t3 - t2) * hstep * slope[i + 1];
    }
};

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

ForceKernel load_tabulated_kernel(std::span<const double> u, std::span<const double> j,
                                  std::string provenance) {
    if (u.size() != j.size())
        throw std::invalid_argument("load_tabulated_kernel: column lengths differ");
    if (u.size() < 8)
        throw std::invalid_argument("load_tabulated_kernel: need at least 8 points");
    if (u[0] != 0.0)
        throw std::invalid_argument("load_tabulated_kernel: u samples must start at 0");
    for (size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i]) || !std::isfinite(j[i]))
            throw std::invalid_argument("load_tabulated_kernel: non-finite table entry");
        if (i > 0 && !(u[i] > u[i - 1]))
            throw std::invalid_argument("load_tabulated_kernel: u samples must be strictly increasing");
        if (j[i] < 0.0)
            throw std::invalid_argument("load_tabulated_kernel: J values must be >= 0");
    }

    auto table = std::make_shared<PchipTable>();
    table->x.assign(u.begin(), u.end());
    table->y.assign(j.begin(), j.end());
    table->slope = pchip_slopes(table->x, table->y);

    // Exponential tail: least-squares fit of log J over the last decade of u
    // (at least the last two points). Growth is clamped off; the gap
    // integral's truncation guard catches kernels that decay too slowly.
    const double u_back = table->x.back();
    size_t first = table->x.size() - 2;
    while (first > 0 && table->x[first - 1] > 0.1 * u_back) --first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (size_t i = first; i < table->x.size(); ++i) {
        if (table->y[i] <= 0.0) continue;
        const double lx = table->x[i], ly = std::log(table->y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    double rate = 0.0;
    if (cnt >= 2) {
        const double denom = cnt * sxx - sx * sx;
        if (denom > 0.0) rate = (cnt * sxy - sx * sy) / denom;
    }
    table->tail_rate = std::min(rate, 0.0);
    if (table->y.back() == 0.0) table->tail_rate = 0.0;  // tail identically zero

    ForceKernel k;
    k.name = "tabulated";
    k.provenance = std::move(provenance);
    k.eval = [table](double uu) { return (*table)(uu); };
    return k;
}

ForceKernel load_kernel_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_kernel_table_file: cannot open " + path);

    std::ostringstream raw;
    raw << in.rdbuf();
    const std::string bytes = raw.str();

    std::istringstream lines(bytes);
    std::string line;
    bool header_seen = false;
    std::vector<double> us, js;
    while (std::getline(lines, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (!header_seen) {
            if (line.rfind("kernel-table v1", 0) != 0)
                throw std::invalid_argument(
                    "load_kernel_table_file: missing 'kernel-table v1' header in " + path);
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        double u, j;
        if (!(row >> u >> j))
            throw std::invalid_argument("load_kernel_table_file: malformed row '" + line + "'");
        us.push_back(u);
        js.push_back(j);
    }
    if (!header_seen)
        throw std::invalid_argument("load_kernel_table_file: empty file " + path);

    char digest[32];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return load_tabulated_kernel(us, js, path + " fnv1a64:" + digest);
}

} // namespace pinion
