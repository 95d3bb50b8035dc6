// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace pinion {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-300;   ///< floor for integrals that are themselves ~0
    int max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Throws NumericalError if the interval budget is exhausted before the
/// requested tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts = {});

struct SemiInfiniteOptions {
    QuadratureOptions segment;     ///< per-segment adaptive settings
    double tail_rel = 1e-12;       ///< stop once a whole segment adds less than this
    double t_max = 1024.0;         ///< truncation budget
};

/// Integrate f over [0, inf) by doubling segments [0,1], [1,2], [2,4], ...
/// until two consecutive segments each contribute less than tail_rel of the
/// accumulated value. Throws KernelDecayError if that never happens before
/// t_max.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const SemiInfiniteOptions& opts = {});

} // namespace pinion
