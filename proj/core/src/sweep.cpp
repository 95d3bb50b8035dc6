// SPDX-License-Identifier: Apache-2.0
#include "pinion/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "pinion/version.hpp"
#include "pinion/workers.hpp"

namespace pinion {

int Axis::count() const {
    return static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
}

void Axis::validate() const {
    if (!(step > 0.0) || !std::isfinite(min) || !std::isfinite(max) || max < min)
        throw std::invalid_argument("Axis '" + name + "': need finite min <= max and step > 0");
    const int n = count();
    if (n < 1 || n > 10000)
        throw std::invalid_argument("Axis '" + name + "': cell count out of range 1..1e4");
}

int GridResult::match_count() const {
    int k = 0;
    for (const OrbitClass& c : cells)
        if (spec.target.matches(c)) ++k;
    return k;
}

namespace {

// Evaluate the full raster with a static row partition: rows are contiguous
// blocks of cells, every write lands in a distinct slot, and each cell is a
// pure function of its coordinates, so the result is byte-identical for any
// worker count.
GridResult run_grid(GridSpec spec, const char* kind, const SweepOptions& opts,
                    const std::function<ReducedParams(double, double)>& cell_params,
                    const std::function<State(double, double)>& cell_state,
                    std::vector<OrbitSummary>* summaries) {
    spec.axis0.validate();
    spec.axis1.validate();

    GridResult res;
    res.spec = std::move(spec);
    res.meta.classify = opts.classify;
    res.meta.kind = kind;
    res.meta.code_version = version();
    const int workers = resolve_workers(opts.workers);

    const int rows = res.spec.axis0.count();
    const int cols = res.spec.axis1.count();
    res.cells.resize(static_cast<size_t>(rows) * cols);
    if (summaries) summaries->resize(res.cells.size());

    detail::parallel_blocks(rows, workers, [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            const double x0 = res.spec.axis0.value(i);
            for (int j = 0; j < cols; ++j) {
                const double x1 = res.spec.axis1.value(j);
                const size_t idx = static_cast<size_t>(i) * cols + j;
                OrbitSummary s;
                try {
                    s = classify_orbit(cell_params(x0, x1), cell_state(x0, x1), opts.classify);
                } catch (const std::exception&) {
                    s = OrbitSummary{};  // cell stays Unclassified
                }
                res.cells[idx] = s.orbit;
                if (summaries) (*summaries)[idx] = s;
            }
        }
    });
    return res;
}

} // namespace

GridResult basin_map(const ReducedParams& p, GridSpec spec, const SweepOptions& opts,
                     std::vector<OrbitSummary>* summaries) {
    p.validate();
    if (spec.axis0.name != "u0" || spec.axis1.name != "v0")
        throw std::invalid_argument("basin_map: axes must be named u0, v0");
    spec.base = p;
    return run_grid(std::move(spec), "basin", opts,
                    [&p](double, double) { return p; },
                    [](double u0, double v0) { return State{u0, v0, 0.0}; },
                    summaries);
}

GridResult drive_map(double eps, double w, const State& s0, GridSpec spec,
                     const SweepOptions& opts, std::vector<OrbitSummary>* summaries) {
    if (spec.axis0.name != "y_s" || spec.axis1.name != "omega_s")
        throw std::invalid_argument("drive_map: axes must be named y_s, omega_s");
    s0.validate();
    ReducedParams base = spec.base;
    base.eps = eps;
    base.w = w;
    spec.base = base;
    spec.s0 = s0;
    return run_grid(std::move(spec), "drive", opts,
                    [base](double y_s, double omega_s) {
                        ReducedParams p = base;
                        p.y_s = y_s;
                        p.omega_s = omega_s;
                        return p;
                    },
                    [&s0](double, double) { return s0; },
                    summaries);
}

} // namespace pinion
