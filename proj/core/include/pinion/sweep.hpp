// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pinion/orbit.hpp"
#include "pinion/params.hpp"

namespace pinion {

/// One grid axis: values min + i*step for i = 0 .. count()-1, covering
/// [min, max] at the stated increment (lower lattice point semantics).
struct Axis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;

    int count() const;
    double value(int i) const { return min + i * step; }
    void validate() const;  ///< step > 0, 1 <= count <= 1e4
};

/// Which rotating orbits a sweep is after; sign 0 accepts both directions.
struct TargetFilter {
    int m = 1;
    int n = 1;
    int sign = +1;

    bool matches(const OrbitClass& c) const {
        return c.rotating() && c.m == m && c.n == n && (sign == 0 || c.sign == sign);
    }
};

/// Two-axis sweep description: axis0 is the slow (row) axis, axis1 the fast
/// one; the fixed parameter block and initial state complete each cell.
struct GridSpec {
    Axis axis0;
    Axis axis1;
    ReducedParams base;
    State s0;
    TargetFilter target;
};

struct SweepOptions {
    ClassifyOptions classify{
        .transient_periods = 200,
        .test_periods = 16,
        .steps_per_period = 200,  // sweep resolution; halve/double to probe sensitivity
        .budget_periods = 500,
    };
    int workers = 0;  ///< 0 = PINION_WORKERS env or hardware
};

/// Everything needed to reproduce a raster bit-exactly: the resolved
/// numeric options and the code version. The worker count is deliberately
/// not part of the result; rasters are worker-independent.
struct GridMetadata {
    ClassifyOptions classify;
    std::string kind;  ///< "basin" or "drive"
    std::string code_version;
};

/// Classification raster in row-major order: cell (i, j) at index
/// i * axis1.count() + j.
struct GridResult {
    GridSpec spec;
    GridMetadata meta;
    std::vector<OrbitClass> cells;

    int rows() const { return spec.axis0.count(); }
    int cols() const { return spec.axis1.count(); }
    const OrbitClass& at(int i, int j) const {
        return cells[static_cast<size_t>(i) * static_cast<size_t>(cols()) + static_cast<size_t>(j)];
    }
    int match_count() const;
};

/// Basin-of-attraction sweep: axes are the initial conditions ("u0", "v0"),
/// all reduced parameters fixed. Cell failures (divergence, budget
/// exhaustion) are recorded as Unclassified; the grid never aborts.
/// Deterministic: the raster is independent of the worker count.
GridResult basin_map(const ReducedParams& p, GridSpec spec, const SweepOptions& opts = {},
                     std::vector<OrbitSummary>* summaries = nullptr);

/// Drive-parameter sweep: axes are ("y_s", "omega_s"), the initial state is
/// fixed (default (0,0,0)), eps and w come from the arguments.
GridResult drive_map(double eps, double w, const State& s0, GridSpec spec,
                     const SweepOptions& opts = {},
                     std::vector<OrbitSummary>* summaries = nullptr);

} // namespace pinion
