// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "pinion/errors.hpp"
#include "pinion/quadrature.hpp"

using namespace pinion;

TEST_CASE("adaptive Gauss-Kronrod on known integrals") {
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    // mildly peaked integrand forces subdivision
    CHECK(integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0) ==
          doctest::Approx(2.0 / 1e-2 * std::atan(1.0 / 1e-2)).epsilon(1e-9));
}

TEST_CASE("Beta-identity family: Int_1^inf s^-a (s-1)^-1/2 ds = B(1/2, a - 1/2)") {
    // after s = 1 + t^2 the integrand is 2 (1 + t^2)^-a on [0, inf)
    for (double a : {3.0, 4.0, 5.0, 6.0}) {
        auto f = [a](double t) { return 2.0 * std::pow(1.0 + t * t, -a); };
        const double exact =
            std::sqrt(std::numbers::pi) * std::tgamma(a - 0.5) / std::tgamma(a);
        INFO("a=", a);
        CHECK(integrate_semi_infinite(f) == doctest::Approx(exact).epsilon(1e-8));
    }
}

TEST_CASE("a = 5 case equals 35 pi / 128") {
    auto f = [](double t) { return 2.0 * std::pow(1.0 + t * t, -5.0); };
    CHECK(integrate_semi_infinite(f) ==
          doctest::Approx(35.0 * std::numbers::pi / 128.0).epsilon(1e-8));
}

TEST_CASE("non-decaying integrand exhausts the truncation budget") {
    SemiInfiniteOptions opts;
    opts.t_max = 64.0;
    CHECK_THROWS_AS(integrate_semi_infinite([](double t) { return 1.0 / (1.0 + t); }, opts),
                    KernelDecayError);
}

TEST_CASE("interval budget exhaustion is reported") {
    QuadratureOptions opts;
    opts.max_intervals = 3;
    opts.rel_tol = 1e-14;
    CHECK_THROWS_AS(
        integrate_adaptive([](double x) { return 1.0 / (1e-8 + x * x); }, -1.0, 1.0, opts),
        NumericalError);
}
