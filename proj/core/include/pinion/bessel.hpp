// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace pinion {

/// Bessel function of the first kind of nonnegative integer order,
/// absolute accuracy ~1e-10 for |z| < 1e4.
///
/// Small and medium arguments use Miller's downward recurrence normalized
/// with J_0(z) + 2 sum_k J_{2k}(z) = 1; large arguments (where the Hankel
/// series converges well ahead of the recurrence cost) use the asymptotic
/// expansion. Negative z is handled by J_n(-z) = (-1)^n J_n(z).
///
/// Throws std::invalid_argument for n < 0 or |z| >= 1e4.
double bessel_jn(int n, double z);

/// max over z >= 0 of |J_n(z)|. For n >= 1 this is the first maximum of
/// J_n (the envelope decays like z^{-1/2}); for n = 0 it is J_0(0) = 1.
/// Located by coarse scan plus golden-section refinement.
double bessel_jn_sup(int n);

} // namespace pinion
