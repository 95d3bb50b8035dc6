// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "pinion/grid_io.hpp"
#include "pinion/load.hpp"
#include "pinion/sweep.hpp"

using namespace pinion;

namespace {

ReducedParams fig2_params() {
    ReducedParams p;
    p.eps = 0.5;
    p.w = 0.185;
    p.y_s = 1.4;
    p.omega_s = 2.0 / 3.0;
    return p;
}

GridSpec basin_spec(double step) {
    GridSpec s;
    s.axis0 = {"u0", -3.0, 3.0, step};
    s.axis1 = {"v0", -2.0, 2.0, step};
    s.target = {1, 1, +1};
    return s;
}

} // namespace

TEST_CASE("axis cell counting is robust to representation noise") {
    CHECK(Axis{"omega_s", 0.01, 2.0, 0.01}.count() == 200);
    CHECK(Axis{"u0", -3.141592653589793, 3.141592653589793, 0.02}.count() == 315);
    CHECK(Axis{"v0", -3.0, 3.0, 0.02}.count() == 301);
    CHECK(Axis{"y_s", 0.0, 3.0, 0.01}.count() == 301);
    CHECK(Axis{"x", 0.0, 1.0, 2.0}.count() == 1);
    CHECK_THROWS_AS((Axis{"x", 0.0, 1.0, -0.1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Axis{"x", 0.0, 1e6, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("a single-cell grid reproduces classify_orbit") {
    const ReducedParams p = fig2_params();
    GridSpec spec;
    spec.axis0 = {"u0", -2.5, -2.5, 1.0};
    spec.axis1 = {"v0", -1.5, -1.5, 1.0};
    spec.target = {1, 1, +1};
    SweepOptions opts;
    const GridResult g = basin_map(p, spec, opts);
    REQUIRE(g.cells.size() == 1);

    const OrbitSummary direct = classify_orbit(p, {-2.5, -1.5, 0.0}, opts.classify);
    CHECK(g.cells[0].kind == direct.orbit.kind);
    CHECK(g.cells[0].m == direct.orbit.m);
    CHECK(g.cells[0].n == direct.orbit.n);
    CHECK(g.cells[0].sign == direct.orbit.sign);
    CHECK(g.cells[0].residual == direct.orbit.residual);
    CHECK(g.match_count() == 1);
}

TEST_CASE("a single-cell drive map reproduces classify_orbit") {
    GridSpec spec;
    spec.axis0 = {"y_s", 1.2, 1.2, 1.0};
    spec.axis1 = {"omega_s", 0.9, 0.9, 1.0};
    spec.target = {1, 1, 0};
    SweepOptions opts;
    const State s0{0.0, 0.0, 0.0};
    const GridResult g = drive_map(0.5, 0.1, s0, spec, opts);
    REQUIRE(g.cells.size() == 1);

    ReducedParams p;
    p.eps = 0.5;
    p.w = 0.1;
    p.y_s = 1.2;
    p.omega_s = 0.9;
    const OrbitSummary direct = classify_orbit(p, s0, opts.classify);
    CHECK(g.cells[0].kind == direct.orbit.kind);
    CHECK(g.cells[0].m == direct.orbit.m);
    CHECK(g.cells[0].n == direct.orbit.n);
    CHECK(g.cells[0].sign == direct.orbit.sign);
    CHECK(g.cells[0].residual == direct.orbit.residual);
}

TEST_CASE("undriven grid has no rotating cells") {
    ReducedParams p;
    p.eps = 0.5;
    p.omega_s = 1.0;
    const GridResult g = basin_map(p, basin_spec(0.5), {});
    CHECK(g.match_count() == 0);
    for (const OrbitClass& c : g.cells) CHECK(c.kind == OrbitClass::Kind::locked);
}

TEST_CASE("raster is byte-identical across worker counts") {
    const ReducedParams p = fig2_params();
    SweepOptions o1;
    o1.workers = 1;
    SweepOptions o3 = o1;
    o3.workers = 3;
    SweepOptions o8 = o1;
    o8.workers = 8;
    const GridResult g1 = basin_map(p, basin_spec(0.25), o1);
    const GridResult g3 = basin_map(p, basin_spec(0.25), o3);
    const GridResult g8 = basin_map(p, basin_spec(0.25), o8);

    CHECK(format_grid(g1, GridFormat::csv) == format_grid(g3, GridFormat::csv));
    CHECK(format_grid(g3, GridFormat::csv) == format_grid(g8, GridFormat::csv));
}

TEST_CASE("grid completeness and summaries") {
    const ReducedParams p = fig2_params();
    std::vector<OrbitSummary> summaries;
    const GridResult g = basin_map(p, basin_spec(0.5), {}, &summaries);
    CHECK(g.cells.size() == static_cast<size_t>(g.rows()) * g.cols());
    CHECK(summaries.size() == g.cells.size());
    int converged = 0;
    for (size_t i = 0; i < summaries.size(); ++i) {
        CHECK(summaries[i].orbit.kind == g.cells[i].kind);
        if (g.cells[i].kind == OrbitClass::Kind::rotating ||
            g.cells[i].kind == OrbitClass::Kind::locked) {
            ++converged;
            CHECK(summaries[i].identity_residual < 1e-3);
        }
    }
    CHECK(converged > 0);
}

TEST_CASE("drive map marks both rotation directions and respects the averaged-load bound") {
    GridSpec spec;
    spec.axis0 = {"y_s", 0.4, 2.0, 0.2};
    spec.axis1 = {"omega_s", 0.3, 1.5, 0.2};
    spec.target = {1, 1, 0};
    const GridResult g = drive_map(0.5, 0.1, {0.0, 0.0, 0.0}, spec, {});
    CHECK(g.match_count() > 0);

    // Every rotating cell satisfies the necessary averaged-load condition;
    // the load term enters the period average with the rotation direction,
    // so lifting (+1) requires w < 1 - eps omega_s m/n while falling (-1)
    // only requires w < 1 + eps omega_s m/n.
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            const OrbitClass& c = g.at(i, j);
            if (!c.rotating()) continue;
            ReducedParams p = g.spec.base;
            p.omega_s = g.spec.axis1.value(j);
            const double friction_term =
                p.eps * p.omega_s * static_cast<double>(c.m) / c.n;
            if (c.sign > 0)
                CHECK(p.w < load_bound_simple(p, c.m, c.n));
            else
                CHECK(p.w < 1.0 + friction_term);
        }
    }
}

TEST_CASE("heavy load forbids upward rotation everywhere in a drive map") {
    GridSpec spec;
    spec.axis0 = {"y_s", 0.5, 2.0, 0.5};
    spec.axis1 = {"omega_s", 0.4, 1.2, 0.4};
    spec.target = {1, 1, +1};  // load-lifting direction
    const GridResult g = drive_map(0.5, 1.05, {0.0, 0.0, 0.0}, spec, {});
    CHECK(g.match_count() == 0);
}

TEST_CASE("axis names are enforced per sweep kind") {
    GridSpec spec = basin_spec(1.0);
    CHECK_THROWS_AS(drive_map(0.5, 0.1, {0.0, 0.0, 0.0}, spec, {}), std::invalid_argument);
    spec.axis0.name = "y_s";
    CHECK_THROWS_AS(basin_map(fig2_params(), spec, {}), std::invalid_argument);
}
