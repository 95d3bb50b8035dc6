// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "pinion/grid_io.hpp"

using namespace pinion;

namespace {

bool same_double(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

bool same_grid(const GridResult& a, const GridResult& b) {
    if (a.spec.axis0.name != b.spec.axis0.name || a.spec.axis1.name != b.spec.axis1.name)
        return false;
    if (a.spec.axis0.min != b.spec.axis0.min || a.spec.axis0.max != b.spec.axis0.max ||
        a.spec.axis0.step != b.spec.axis0.step)
        return false;
    if (a.spec.axis1.min != b.spec.axis1.min || a.spec.axis1.max != b.spec.axis1.max ||
        a.spec.axis1.step != b.spec.axis1.step)
        return false;
    const ReducedParams &pa = a.spec.base, &pb = b.spec.base;
    if (pa.eps != pb.eps || pa.w != pb.w || pa.y_s != pb.y_s || pa.omega_s != pb.omega_s ||
        pa.phi_s != pb.phi_s || pa.T != pb.T)
        return false;
    if (a.spec.s0.u != b.spec.s0.u || a.spec.s0.v != b.spec.s0.v || a.spec.s0.tau != b.spec.s0.tau)
        return false;
    if (a.spec.target.m != b.spec.target.m || a.spec.target.n != b.spec.target.n ||
        a.spec.target.sign != b.spec.target.sign)
        return false;
    if (a.meta.kind != b.meta.kind || a.meta.code_version != b.meta.code_version)
        return false;
    const ClassifyOptions &ca = a.meta.classify, &cb = b.meta.classify;
    if (ca.transient_periods != cb.transient_periods || ca.test_periods != cb.test_periods ||
        ca.n_max != cb.n_max || ca.m_max != cb.m_max || ca.tolerance != cb.tolerance ||
        ca.steps_per_period != cb.steps_per_period || ca.max_step != cb.max_step ||
        ca.divergence_guard != cb.divergence_guard || ca.budget_periods != cb.budget_periods ||
        ca.early_accept != cb.early_accept || ca.chaos_threshold != cb.chaos_threshold)
        return false;
    if (a.cells.size() != b.cells.size()) return false;
    for (size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].kind != b.cells[i].kind || a.cells[i].m != b.cells[i].m ||
            a.cells[i].n != b.cells[i].n || a.cells[i].sign != b.cells[i].sign ||
            !same_double(a.cells[i].residual, b.cells[i].residual))
            return false;
    }
    return true;
}

GridResult random_grid(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_real_distribution<double> real(-2.0, 2.0);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> small(1, 4);

    GridResult g;
    const int rows = dim(rng), cols = dim(rng);
    g.spec.axis0 = {"u0", 0.0, static_cast<double>(rows - 1), 1.0};
    g.spec.axis1 = {"v0", 0.0, static_cast<double>(cols - 1), 1.0};
    g.spec.base.eps = std::abs(real(rng));
    g.spec.base.w = std::abs(real(rng));
    g.spec.base.y_s = std::abs(real(rng));
    g.spec.base.omega_s = 0.5 + std::abs(real(rng));
    g.spec.base.phi_s = real(rng) / 2.0;
    g.spec.s0 = {real(rng), real(rng), 0.0};
    g.spec.target = {small(rng), small(rng), 1};
    g.meta.kind = "basin";
    g.meta.code_version = "test";
    for (int i = 0; i < rows * cols; ++i) {
        OrbitClass c;
        switch (kind(rng)) {
            case 0:
                c.kind = OrbitClass::Kind::rotating;
                c.m = small(rng);
                c.n = small(rng);
                c.sign = (i % 2) ? 1 : -1;
                c.residual = std::abs(real(rng)) * 1e-4;
                break;
            case 1:
                c.kind = OrbitClass::Kind::locked;
                c.residual = std::abs(real(rng)) * 1e-4;
                break;
            case 2:
                c.kind = OrbitClass::Kind::chaotic;
                break;
            default:
                c.kind = OrbitClass::Kind::unclassified;
                break;
        }
        g.cells.push_back(c);
    }
    return g;
}

} // namespace

TEST_CASE("CSV shape: header plus one row per cell, row-major") {
    std::mt19937_64 rng(5);
    GridResult g = random_grid(rng);
    g.spec.axis0 = {"u0", 0.0, 1.0, 1.0};
    g.spec.axis1 = {"v0", 0.0, 1.0, 1.0};
    g.cells.resize(4);

    const std::string csv = format_grid(g, GridFormat::csv);
    std::istringstream in(csv);
    std::string line;
    int comments = 0, data = 0;
    std::string header;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') { ++comments; continue; }
        if (header.empty()) { header = line; continue; }
        rows.push_back(line);
        ++data;
    }
    CHECK(header == "u0,v0,class,m,n,sign,residual");
    CHECK(data == 4);
    CHECK(comments >= 3);
    // row-major: cell (i=1, j=0) appears after both j cells of i=0
    CHECK(rows[2].rfind("1,0,", 0) == 0);
}

TEST_CASE("round trip through CSV and JSON") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const GridResult g = random_grid(rng);
        const GridResult via_csv = parse_grid(format_grid(g, GridFormat::csv));
        const GridResult via_json = parse_grid(format_grid(g, GridFormat::json));
        CHECK(same_grid(g, via_csv));
        CHECK(same_grid(g, via_json));
    }
}

TEST_CASE("file round trip with autodetection") {
    std::mt19937_64 rng(7);
    const GridResult g = random_grid(rng);
    write_grid(g, "rt.csv", GridFormat::csv);
    write_grid(g, "rt.json", GridFormat::json);
    CHECK(same_grid(g, read_grid("rt.csv")));
    CHECK(same_grid(g, read_grid("rt.json")));
    std::remove("rt.csv");
    std::remove("rt.json");
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS(parse_grid(""));
    CHECK_THROWS(parse_grid("u0,v0,class\n1,2,Locked\n"));
    CHECK_THROWS_AS(read_grid("no_such_grid_file.csv"), std::runtime_error);

    std::mt19937_64 rng(13);
    GridResult g = random_grid(rng);
    std::string json = format_grid(g, GridFormat::json);
    json.replace(json.find("grid-result v1"), 14, "grid-result v9");
    CHECK_THROWS_AS(parse_grid(json), std::invalid_argument);
}
