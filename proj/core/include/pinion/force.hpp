// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pinion {

/// hbar * c, the only dimensional constant of the force law [J m].
inline constexpr double hbar_c = 3.1615e-26;

/// Geometry of the corrugated pair: cylindrical pinion of length L and
/// radius R held at nearest distance H above the rack; both carry sinusoidal
/// corrugations of wavelength lambda and amplitudes a1 (pinion), a2 (rack).
/// All lengths in meters.
struct RackPinionGeometry {
    double length;       ///< L
    double radius;       ///< R
    double a1;
    double a2;
    double wavelength;   ///< lambda
    double gap;          ///< H

    void validate() const;  ///< all fields finite and > 0

    /// Non-fatal validity diagnostics: the perturbative treatment needs
    /// a1, a2 << H (warn above 0.1 H) and the proximity approximation
    /// needs H < R.
    std::vector<std::string> warnings() const;
};

/// Dimensionless coupling kernel J(u) >= 0 of the corrugation interaction.
/// Must decay fast enough at large u for the gap integral to truncate.
struct ForceKernel {
    std::function<double(double)> eval;
    std::string name;
    std::string provenance;

    double operator()(double u) const { return eval(u); }
};

/// J == 1; the integral then has the closed Beta-function value, which makes
/// this kernel the quadrature oracle.
ForceKernel unit_kernel();

/// J(u) = (1 + 2 pi u) exp(-2 pi u): finite at contact, exponential tail on
/// the corrugation length scale. Qualitative stand-in for a computed kernel.
ForceKernel toy_kernel();

std::vector<ForceKernel> builtin_kernels();

struct ForceResult {
    double force;       ///< F [N]
    double prefactor;   ///< pi sqrt(2) hbar c a1 a2 L sqrt(R) / (lambda H^{9/2})
    double integral;    ///< dimensionless gap integral
    std::vector<std::string> warnings;
};

/// Proximity-force amplitude of the lateral coupling,
///   F = prefactor * Int_1^inf ds s^-5 (s-1)^-1/2 J(H s / lambda),
/// with the endpoint singularity removed exactly by s = 1 + t^2 and the
/// resulting smooth integrand integrated adaptively to 1e-8 relative.
/// Geometry warnings are returned, not thrown; a kernel that fails to decay
/// within the truncation budget throws KernelDecayError.
ForceResult force_amplitude(const RackPinionGeometry& g, const ForceKernel& kernel);

/// Bare gap integral (used by force_amplitude; exposed for scaling tests).
double gap_integral(double gap_over_wavelength, const ForceKernel& kernel);

/// Build a kernel from (u, J) samples: monotone cubic interpolation inside
/// the table, exponential tail fitted over the last decade of u beyond it.
/// Requires >= 8 points, u strictly increasing from 0, J >= 0.
ForceKernel load_tabulated_kernel(std::span<const double> u, std::span<const double> j,
                                  std::string provenance = {});

/// Parse a "kernel-table v1" file (two numeric columns, '#' comments) and
/// build the tabulated kernel. The provenance records the file name and a
/// digest of its bytes.
ForceKernel load_kernel_table_file(const std::string& path);

} // namespace pinion
