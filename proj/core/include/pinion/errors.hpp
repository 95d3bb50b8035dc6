// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pinion {

/// Base class for failures of the numerics themselves (as opposed to
/// precondition violations, which throw std::invalid_argument).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when |v| exceeds the divergence guard during integration.
class DivergenceError : public NumericalError {
public:
    DivergenceError(double tau, double v, double guard)
        : NumericalError("trajectory diverged: |v| = " + std::to_string(v) +
                         " exceeded guard " + std::to_string(guard) +
                         " at tau = " + std::to_string(tau)),
          tau(tau), v(v) {}

    double tau;
    double v;
};

/// Thrown when a bisection bracket does not straddle the sought transition.
class BracketError : public NumericalError {
public:
    explicit BracketError(const std::string& what) : NumericalError(what) {}
};

/// Thrown when a force kernel fails to decay within the truncation budget
/// of the semi-infinite quadrature.
class KernelDecayError : public NumericalError {
public:
    explicit KernelDecayError(const std::string& what) : NumericalError(what) {}
};

} // namespace pinion
