// SPDX-License-Identifier: Apache-2.0
//
// pinion: simulate, classify, and sweep the reduced rack-pinion dynamics,
// and evaluate the proximity-force coupling amplitude.
//
// Usage: pinion <mode> <config.json> [--set key.path=value]... [options]
// Exit codes: 0 success, 1 configuration error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinion/dynamics.hpp"
#include "pinion/errors.hpp"
#include "pinion/force.hpp"
#include "pinion/grid_io.hpp"
#include "pinion/load.hpp"
#include "pinion/lyapunov.hpp"
#include "pinion/orbit.hpp"
#include "pinion/params.hpp"
#include "pinion/sweep.hpp"
#include "pinion/version.hpp"

using nlohmann::json;

namespace {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// Strict config validation: every key must be known, so typos fail loudly
// with the offending dotted path.

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> known) {
    if (!obj.is_object()) throw ConfigError("config key '" + path + "' must be an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ConfigError("unknown config key '" + (path.empty() ? key : path + "." + key) + "'");
    }
}

double num_at(const json& obj, const std::string& path, const char* key,
              std::optional<double> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("missing config key '" + path + "." + key + "'");
    }
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("config key '" + path + "." + key + "' must be a number");
    return v.get<double>();
}

// Lengths for the force mode: plain numbers are meters, strings carry a unit
// suffix (nm, um, µm, mm, m).
double length_at(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) throw ConfigError("missing config key '" + path + "." + key + "'");
    const json& v = obj.at(key);
    if (v.is_number()) return v.get<double>();
    if (!v.is_string())
        throw ConfigError("config key '" + path + "." + key + "' must be a number (meters) or a string with a unit suffix");
    const std::string s = v.get<std::string>();
    size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + path + "." + key + "': cannot parse '" + s + "'");
    }
    std::string unit = s.substr(pos);
    if (!unit.empty() && unit.front() == ' ') unit.erase(0, 1);
    if (unit == "nm") return value * 1e-9;
    if (unit == "um" || unit == "µm") return value * 1e-6;
    if (unit == "mm") return value * 1e-3;
    if (unit == "m" || unit.empty()) return value;
    throw ConfigError("config key '" + path + "." + key + "': unknown unit '" + unit + "'");
}

// ---------------------------------------------------------------------------
// Config blocks

pinion::ReducedParams parse_reduced(const json& j) {
    check_keys(j, "reduced", {"eps", "w", "y_s", "omega_s", "phi_s", "T"});
    pinion::ReducedParams p;
    p.eps = num_at(j, "reduced", "eps");
    p.w = num_at(j, "reduced", "w");
    p.y_s = num_at(j, "reduced", "y_s");
    p.omega_s = num_at(j, "reduced", "omega_s");
    p.phi_s = pinion::wrap_angle(num_at(j, "reduced", "phi_s", 0.0));
    p.T = num_at(j, "reduced", "T", 1.0);
    return p;
}

struct PhysicalBlock {
    pinion::PhysicalParams phys;
    pinion::DriveParams drive;
};

PhysicalBlock parse_physical(const json& j) {
    check_keys(j, "physical",
               {"inertia", "radius", "friction", "wavelength", "force_amp", "load_arm", "load", "drive"});
    PhysicalBlock b;
    b.phys.inertia = num_at(j, "physical", "inertia");
    b.phys.radius = num_at(j, "physical", "radius");
    b.phys.friction = num_at(j, "physical", "friction", 0.0);
    b.phys.wavelength = num_at(j, "physical", "wavelength");
    b.phys.force_amp = num_at(j, "physical", "force_amp");
    b.phys.load_arm = num_at(j, "physical", "load_arm", 0.0);
    b.phys.load = num_at(j, "physical", "load", 0.0);
    if (!j.contains("drive")) throw ConfigError("missing config key 'physical.drive'");
    const json& d = j.at("drive");
    check_keys(d, "physical.drive", {"amplitude", "omega", "phase"});
    b.drive.amplitude = num_at(d, "physical.drive", "amplitude");
    b.drive.omega = num_at(d, "physical.drive", "omega");
    b.drive.phase = pinion::wrap_angle(num_at(d, "physical.drive", "phase", 0.0));
    return b;
}

pinion::ClassifyOptions parse_numerics(const json& root) {
    pinion::ClassifyOptions o;
    if (!root.contains("numerics")) return o;
    const json& j = root.at("numerics");
    check_keys(j, "numerics",
               {"steps_per_period", "transient_periods", "test_periods", "n_max", "m_max",
                "tolerance", "max_step", "divergence_guard", "budget_periods", "early_accept",
                "chaos_threshold", "chaos_fast_threshold", "chaos_confirm_periods",
                "min_measure_periods"});
    o.steps_per_period = static_cast<int>(num_at(j, "numerics", "steps_per_period", o.steps_per_period));
    o.transient_periods = static_cast<int>(num_at(j, "numerics", "transient_periods", o.transient_periods));
    o.test_periods = static_cast<int>(num_at(j, "numerics", "test_periods", o.test_periods));
    o.n_max = static_cast<int>(num_at(j, "numerics", "n_max", o.n_max));
    o.m_max = static_cast<int>(num_at(j, "numerics", "m_max", o.m_max));
    o.tolerance = num_at(j, "numerics", "tolerance", o.tolerance);
    o.max_step = num_at(j, "numerics", "max_step", o.max_step);
    o.divergence_guard = num_at(j, "numerics", "divergence_guard", o.divergence_guard);
    o.budget_periods = static_cast<int>(num_at(j, "numerics", "budget_periods", o.budget_periods));
    if (j.contains("early_accept")) {
        if (!j.at("early_accept").is_boolean())
            throw ConfigError("config key 'numerics.early_accept' must be a boolean");
        o.early_accept = j.at("early_accept").get<bool>();
    }
    o.chaos_threshold = num_at(j, "numerics", "chaos_threshold", o.chaos_threshold);
    o.chaos_fast_threshold = num_at(j, "numerics", "chaos_fast_threshold", o.chaos_fast_threshold);
    o.chaos_confirm_periods =
        static_cast<int>(num_at(j, "numerics", "chaos_confirm_periods", o.chaos_confirm_periods));
    o.min_measure_periods =
        static_cast<int>(num_at(j, "numerics", "min_measure_periods", o.min_measure_periods));
    return o;
}

pinion::State parse_state(const json& root) {
    pinion::State s{0.0, 0.0, 0.0};
    if (!root.contains("initial_state")) return s;
    const json& j = root.at("initial_state");
    check_keys(j, "initial_state", {"u", "v", "tau"});
    s.u = num_at(j, "initial_state", "u", 0.0);
    s.v = num_at(j, "initial_state", "v", 0.0);
    s.tau = num_at(j, "initial_state", "tau", 0.0);
    return s;
}

pinion::Axis parse_axis(const json& j, const std::string& path) {
    check_keys(j, path, {"name", "min", "max", "step"});
    if (!j.contains("name") || !j.at("name").is_string())
        throw ConfigError("config key '" + path + ".name' must be a string");
    return {j.at("name").get<std::string>(), num_at(j, path, "min"), num_at(j, path, "max"),
            num_at(j, path, "step")};
}

struct GridBlock {
    pinion::Axis axis0, axis1;
    pinion::TargetFilter target;
};

GridBlock parse_grid(const json& root, int default_sign) {
    if (!root.contains("grid")) throw ConfigError("missing config key 'grid'");
    const json& j = root.at("grid");
    check_keys(j, "grid", {"axis0", "axis1", "target"});
    if (!j.contains("axis0") || !j.contains("axis1"))
        throw ConfigError("config keys 'grid.axis0' and 'grid.axis1' are required");
    GridBlock g;
    g.axis0 = parse_axis(j.at("axis0"), "grid.axis0");
    g.axis1 = parse_axis(j.at("axis1"), "grid.axis1");
    g.target = {1, 1, default_sign};
    if (j.contains("target")) {
        const json& t = j.at("target");
        check_keys(t, "grid.target", {"m", "n", "sign"});
        g.target.m = static_cast<int>(num_at(t, "grid.target", "m", 1));
        g.target.n = static_cast<int>(num_at(t, "grid.target", "n", 1));
        g.target.sign = static_cast<int>(num_at(t, "grid.target", "sign", default_sign));
    }
    return g;
}

struct OutputBlock {
    std::string path;
    pinion::GridFormat format = pinion::GridFormat::csv;
};

OutputBlock parse_output(const json& root) {
    OutputBlock o;
    if (!root.contains("output")) return o;
    const json& j = root.at("output");
    check_keys(j, "output", {"path", "format"});
    if (j.contains("path")) o.path = j.at("path").get<std::string>();
    if (j.contains("format")) {
        const std::string f = j.at("format").get<std::string>();
        if (f == "csv") o.format = pinion::GridFormat::csv;
        else if (f == "json") o.format = pinion::GridFormat::json;
        else throw ConfigError("config key 'output.format' must be \"csv\" or \"json\"");
    }
    return o;
}

// ---------------------------------------------------------------------------

struct Cli {
    std::string mode;
    std::string config_path;
    std::vector<std::string> sets;
    std::string output_override;
    std::string format_override;
    int workers_flag = 0;
};

json load_config(const Cli& cli) {
    std::ifstream in(cli.config_path);
    if (!in) throw ConfigError("cannot open config file '" + cli.config_path + "'");
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("malformed config '" + cli.config_path + "': " + e.what());
    }

    for (const std::string& kv : cli.sets) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key.path=value, got '" + kv + "'");
        const std::string path = kv.substr(0, eq);
        const std::string raw = kv.substr(eq + 1);
        json value;
        try {
            value = json::parse(raw);
        } catch (const json::exception&) {
            value = raw;  // bare strings are allowed
        }
        json* node = &cfg;
        std::istringstream keys(path);
        std::string key, next;
        if (!std::getline(keys, key, '.')) throw ConfigError("--set: empty key in '" + kv + "'");
        while (std::getline(keys, next, '.')) {
            node = &(*node)[key];
            key = next;
        }
        (*node)[key] = value;
    }

    check_keys(cfg, "",
               {"mode", "reduced", "physical", "initial_state", "numerics", "grid", "simulate",
                "lyapunov", "critical_load", "force", "output", "workers"});
    if (cfg.contains("mode") && cfg.at("mode").get<std::string>() != cli.mode)
        throw ConfigError("config key 'mode' (" + cfg.at("mode").get<std::string>() +
                          ") does not match the requested mode '" + cli.mode + "'");

    if (!cli.output_override.empty()) cfg["output"]["path"] = cli.output_override;
    if (!cli.format_override.empty()) cfg["output"]["format"] = cli.format_override;
    if (cli.workers_flag > 0) cfg["workers"] = cli.workers_flag;
    return cfg;
}

// Exactly one of reduced/physical; physical blocks are reduced on the spot.
struct ResolvedParams {
    pinion::ReducedParams reduced;
    json echo;  // fully resolved parameter set for output metadata
};

ResolvedParams resolve_params(const json& cfg) {
    const bool has_r = cfg.contains("reduced");
    const bool has_p = cfg.contains("physical");
    if (has_r == has_p)
        throw ConfigError("exactly one of 'reduced' or 'physical' must be present");
    ResolvedParams r;
    if (has_r) {
        r.reduced = parse_reduced(cfg.at("reduced"));
    } else {
        const PhysicalBlock b = parse_physical(cfg.at("physical"));
        r.reduced = pinion::reduce_parameters(b.phys, b.drive);
        r.echo["physical"] = cfg.at("physical");
    }
    r.reduced.validate();
    r.echo["reduced"] = {{"eps", r.reduced.eps},        {"w", r.reduced.w},
                         {"y_s", r.reduced.y_s},        {"omega_s", r.reduced.omega_s},
                         {"phi_s", r.reduced.phi_s},    {"T", r.reduced.T}};
    return r;
}

int config_workers(const json& cfg) {
    if (!cfg.contains("workers")) return 0;
    return cfg.at("workers").get<int>();
}

std::ostream& open_output(const OutputBlock& out, std::ofstream& file) {
    if (out.path.empty()) return std::cout;
    file.open(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + out.path + "'");
    return file;
}

// ---------------------------------------------------------------------------
// Modes

int run_simulate(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    const pinion::ClassifyOptions num = parse_numerics(cfg);
    const pinion::State s0 = parse_state(cfg);
    double tau_end = 100.0;
    if (cfg.contains("simulate")) {
        check_keys(cfg.at("simulate"), "simulate", {"tau_end"});
        tau_end = num_at(cfg.at("simulate"), "simulate", "tau_end", 100.0);
    }

    pinion::IntegrateOptions io;
    io.steps_per_period = num.steps_per_period;
    io.divergence_guard = num.divergence_guard;
    const pinion::Trajectory traj = pinion::integrate(s0, rp.reduced, tau_end, io);

    const OutputBlock out = parse_output(cfg);
    std::ofstream file;
    std::ostream& os = open_output(out, file);
    os << "# pinion trajectory v1\n";
    os << "# params: " << rp.echo.dump() << "\n";
    os << "# numerics: {\"steps_per_period\": " << num.steps_per_period
       << ", \"divergence_guard\": " << fmt(num.divergence_guard) << "}\n";
    os << "# h: " << fmt(traj.h) << "\n";
    os << "tau,u,v\n";
    char buf[128];
    for (const pinion::State& s : traj.samples) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", s.tau, s.u, s.v);
        os << buf;
    }
    return 0;
}

int run_classify(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    const pinion::ClassifyOptions num = parse_numerics(cfg);
    const pinion::State s0 = parse_state(cfg);

    const pinion::OrbitSummary s = pinion::classify_orbit(rp.reduced, s0, num);
    const pinion::OrbitClass& c = s.orbit;
    if (c.rotating()) {
        std::cout << "Rotating m=" << c.m << " n=" << c.n << " sign=" << (c.sign > 0 ? "+1" : "-1")
                  << "\n";
        const pinion::MeanVelocity mv = pinion::mean_velocity(c, rp.reduced, 1.0);
        std::cout << "quantized_mean_velocity " << fmt(mv.reduced) << "\n";
    } else {
        std::cout << to_string(c.kind) << (s.diverged ? " (diverged)" : "") << "\n";
    }
    std::cout << "residual " << fmt(c.residual) << "\n";
    std::cout << "mean_velocity " << fmt(s.mean_velocity) << "\n";
    std::cout << "delta " << fmt(s.delta) << "\n";
    std::cout << "identity_residual " << fmt(s.identity_residual) << "\n";
    if (!std::isnan(s.lambda)) std::cout << "lambda " << fmt(s.lambda) << "\n";
    return 0;
}

int run_basin(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    const GridBlock grid = parse_grid(cfg, +1);
    pinion::SweepOptions opts;
    opts.classify = parse_numerics(cfg);
    opts.workers = config_workers(cfg);

    pinion::GridSpec spec;
    spec.axis0 = grid.axis0;
    spec.axis1 = grid.axis1;
    spec.target = grid.target;
    const pinion::GridResult res = pinion::basin_map(rp.reduced, spec, opts);

    const OutputBlock out = parse_output(cfg);
    if (out.path.empty()) {
        std::cout << pinion::format_grid(res, out.format);
    } else {
        pinion::write_grid(res, out.path, out.format);
        std::cout << "cells " << res.cells.size() << "\nmatches " << res.match_count() << "\nwrote "
                  << out.path << "\n";
    }
    return 0;
}

int run_drive_map(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    const GridBlock grid = parse_grid(cfg, 0);  // either rotation direction
    const pinion::State s0 = parse_state(cfg);
    pinion::SweepOptions opts;
    opts.classify = parse_numerics(cfg);
    opts.workers = config_workers(cfg);

    pinion::GridSpec spec;
    spec.axis0 = grid.axis0;
    spec.axis1 = grid.axis1;
    spec.target = grid.target;
    spec.base = rp.reduced;
    const pinion::GridResult res =
        pinion::drive_map(rp.reduced.eps, rp.reduced.w, s0, spec, opts);

    const OutputBlock out = parse_output(cfg);
    if (out.path.empty()) {
        std::cout << pinion::format_grid(res, out.format);
    } else {
        pinion::write_grid(res, out.path, out.format);
        std::cout << "cells " << res.cells.size() << "\nmatches " << res.match_count() << "\nwrote "
                  << out.path << "\n";
    }
    return 0;
}

int run_lyapunov(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    const pinion::ClassifyOptions num = parse_numerics(cfg);
    const pinion::State s0 = parse_state(cfg);

    pinion::LyapunovOptions lo;
    lo.steps_per_period = num.steps_per_period;
    lo.max_step = num.max_step;
    lo.divergence_guard = num.divergence_guard;
    if (cfg.contains("lyapunov")) {
        const json& j = cfg.at("lyapunov");
        check_keys(j, "lyapunov", {"horizon", "renorm_interval", "tangent"});
        lo.horizon = num_at(j, "lyapunov", "horizon", lo.horizon);
        lo.renorm_interval = num_at(j, "lyapunov", "renorm_interval", 0.0);
        if (j.contains("tangent")) {
            check_keys(j.at("tangent"), "lyapunov.tangent", {"du", "dv"});
            lo.tangent_u = num_at(j.at("tangent"), "lyapunov.tangent", "du", 1.0);
            lo.tangent_v = num_at(j.at("tangent"), "lyapunov.tangent", "dv", 0.0);
        }
    }

    const pinion::LyapunovResult r = pinion::largest_lyapunov(rp.reduced, s0, lo);
    std::cout << "lambda_max " << fmt(r.lambda_max) << "\n";
    std::cout << "horizon " << fmt(r.horizon) << "\n";
    std::cout << "renorm_interval " << fmt(r.renorm_interval) << "\n";

    const OutputBlock out = parse_output(cfg);
    if (!out.path.empty()) {
        std::ofstream file(out.path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + out.path + "'");
        file << "# pinion lyapunov-history v1\n# params: " << rp.echo.dump() << "\n";
        file << "# options: {\"horizon\": " << fmt(lo.horizon) << ", \"renorm_interval\": "
             << fmt(r.renorm_interval) << ", \"steps_per_period\": " << lo.steps_per_period
             << ", \"max_step\": " << fmt(lo.max_step) << "}\n";
        file << "interval,lambda\n";
        for (size_t i = 0; i < r.history.size(); ++i)
            file << i + 1 << ',' << fmt(r.history[i]) << "\n";
    }
    return 0;
}

int run_critical_load(const json& cfg) {
    const ResolvedParams rp = resolve_params(cfg);
    if (!cfg.contains("critical_load")) throw ConfigError("missing config key 'critical_load'");
    const json& j = cfg.at("critical_load");
    check_keys(j, "critical_load", {"m", "n", "bracket", "w_tolerance", "ic_grid"});

    const int m = static_cast<int>(num_at(j, "critical_load", "m", 1));
    const int n = static_cast<int>(num_at(j, "critical_load", "n", 1));
    std::pair<double, double> bracket{0.0, 1.0};
    if (j.contains("bracket")) {
        const json& b = j.at("bracket");
        if (!b.is_array() || b.size() != 2)
            throw ConfigError("config key 'critical_load.bracket' must be [w_lo, w_hi]");
        bracket = {b[0].get<double>(), b[1].get<double>()};
    }

    pinion::CriticalLoadOptions opts;
    opts.classify = parse_numerics(cfg);
    opts.workers = config_workers(cfg);
    opts.w_tolerance = num_at(j, "critical_load", "w_tolerance", opts.w_tolerance);
    if (j.contains("ic_grid")) {
        const json& g = j.at("ic_grid");
        check_keys(g, "critical_load.ic_grid", {"u_min", "u_max", "v_min", "v_max", "step"});
        opts.ic.u_min = num_at(g, "critical_load.ic_grid", "u_min", opts.ic.u_min);
        opts.ic.u_max = num_at(g, "critical_load.ic_grid", "u_max", opts.ic.u_max);
        opts.ic.v_min = num_at(g, "critical_load.ic_grid", "v_min", opts.ic.v_min);
        opts.ic.v_max = num_at(g, "critical_load.ic_grid", "v_max", opts.ic.v_max);
        opts.ic.step = num_at(g, "critical_load.ic_grid", "step", opts.ic.step);
    }

    const pinion::CriticalLoadResult r =
        pinion::critical_load(rp.reduced, m, n, bracket, opts);
    std::cout << "w_c " << fmt(r.w_c) << "\n";
    std::cout << "bracket " << fmt(r.w_lo) << " " << fmt(r.w_hi) << "\n";
    std::cout << "ic_grid u [" << fmt(r.ic_policy.u_min) << ", " << fmt(r.ic_policy.u_max)
              << "] v [" << fmt(r.ic_policy.v_min) << ", " << fmt(r.ic_policy.v_max)
              << "] step " << fmt(r.ic_policy.step) << "\n";
    std::cout << "samples_per_probe " << r.samples_per_probe << "\n";
    std::cout << "monotone_violation " << (r.monotone_violation ? 1 : 0) << "\n";
    for (const auto& [w, s] : r.probes)
        std::cout << "probe " << fmt(w) << " " << (s ? "sustained" : "refuted") << "\n";
    return 0;
}

int run_force(const json& cfg) {
    if (!cfg.contains("force")) throw ConfigError("missing config key 'force'");
    const json& j = cfg.at("force");
    check_keys(j, "force", {"geometry", "kernel"});
    if (!j.contains("geometry")) throw ConfigError("missing config key 'force.geometry'");
    const json& g = j.at("geometry");
    check_keys(g, "force.geometry", {"length", "radius", "a1", "a2", "wavelength", "gap"});

    pinion::RackPinionGeometry geo;
    geo.length = length_at(g, "force.geometry", "length");
    geo.radius = length_at(g, "force.geometry", "radius");
    geo.a1 = length_at(g, "force.geometry", "a1");
    geo.a2 = length_at(g, "force.geometry", "a2");
    geo.wavelength = length_at(g, "force.geometry", "wavelength");
    geo.gap = length_at(g, "force.geometry", "gap");

    pinion::ForceKernel kernel = pinion::toy_kernel();
    if (j.contains("kernel")) {
        const json& k = j.at("kernel");
        check_keys(k, "force.kernel", {"name", "table"});
        if (k.contains("table")) {
            kernel = pinion::load_kernel_table_file(k.at("table").get<std::string>());
        } else if (k.contains("name")) {
            const std::string name = k.at("name").get<std::string>();
            bool found = false;
            for (pinion::ForceKernel& b : pinion::builtin_kernels())
                if (b.name == name) {
                    kernel = std::move(b);
                    found = true;
                }
            if (!found) throw ConfigError("config key 'force.kernel.name': unknown kernel '" + name + "'");
        }
    }

    const pinion::ForceResult r = pinion::force_amplitude(geo, kernel);
    for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "force_N " << fmt(r.force) << "\n";
    std::cout << "prefactor_N " << fmt(r.prefactor) << "\n";
    std::cout << "integral " << fmt(r.integral) << "\n";
    std::cout << "kernel " << kernel.name << "\n";
    if (!kernel.provenance.empty()) std::cout << "kernel_provenance " << kernel.provenance << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rack-pinion rectification toolkit (v" + std::string(pinion::version()) + ")"};
    app.require_subcommand(1);

    Cli cli;
    const std::vector<std::string> modes = {"simulate",  "classify",      "basin", "drive-map",
                                            "lyapunov",  "critical-load", "force"};
    for (const std::string& mode : modes) {
        CLI::App* sub = app.add_subcommand(mode);
        sub->add_option("config", cli.config_path, "JSON config file")->required();
        sub->add_option("--set", cli.sets, "override a config key, e.g. --set numerics.tolerance=1e-4");
        sub->add_option("--output", cli.output_override, "output file path");
        sub->add_option("--format", cli.format_override, "output format (csv|json)");
        sub->add_option("--workers", cli.workers_flag, "worker threads (default: PINION_WORKERS or cores)");
        sub->callback([&cli, mode] { cli.mode = mode; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const json cfg = load_config(cli);
        if (cli.mode == "simulate") return run_simulate(cfg);
        if (cli.mode == "classify") return run_classify(cfg);
        if (cli.mode == "basin") return run_basin(cfg);
        if (cli.mode == "drive-map") return run_drive_map(cfg);
        if (cli.mode == "lyapunov") return run_lyapunov(cfg);
        if (cli.mode == "critical-load") return run_critical_load(cfg);
        if (cli.mode == "force") return run_force(cfg);
        std::cerr << "error: unknown mode '" << cli.mode << "'\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
