// SPDX-License-Identifier: Apache-2.0
#include "pinion/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pinion {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// NaN-safe double handling: nlohmann serializes NaN as null.
json num(double x) { return std::isnan(x) ? json() : json(x); }
double as_num(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json to_json(const Axis& a) {
    return {{"name", a.name}, {"min", a.min}, {"max", a.max}, {"step", a.step}};
}

Axis axis_from_json(const json& j) {
    return {j.at("name").get<std::string>(), j.at("min").get<double>(),
            j.at("max").get<double>(), j.at("step").get<double>()};
}

json to_json(const ReducedParams& p) {
    return {{"eps", p.eps},        {"w", p.w},         {"y_s", p.y_s},
            {"omega_s", p.omega_s}, {"phi_s", p.phi_s}, {"T", p.T}};
}

ReducedParams params_from_json(const json& j) {
    ReducedParams p;
    p.eps = j.at("eps").get<double>();
    p.w = j.at("w").get<double>();
    p.y_s = j.at("y_s").get<double>();
    p.omega_s = j.at("omega_s").get<double>();
    p.phi_s = j.at("phi_s").get<double>();
    p.T = j.at("T").get<double>();
    return p;
}

json to_json(const GridSpec& s) {
    return {{"axis0", to_json(s.axis0)},
            {"axis1", to_json(s.axis1)},
            {"base", to_json(s.base)},
            {"s0", {{"u", s.s0.u}, {"v", s.s0.v}, {"tau", s.s0.tau}}},
            {"target", {{"m", s.target.m}, {"n", s.target.n}, {"sign", s.target.sign}}}};
}

GridSpec spec_from_json(const json& j) {
    GridSpec s;
    s.axis0 = axis_from_json(j.at("axis0"));
    s.axis1 = axis_from_json(j.at("axis1"));
    s.base = params_from_json(j.at("base"));
    const json& st = j.at("s0");
    s.s0 = {st.at("u").get<double>(), st.at("v").get<double>(), st.at("tau").get<double>()};
    const json& t = j.at("target");
    s.target = {t.at("m").get<int>(), t.at("n").get<int>(), t.at("sign").get<int>()};
    return s;
}

json to_json(const ClassifyOptions& o) {
    return {{"transient_periods", o.transient_periods},
            {"test_periods", o.test_periods},
            {"n_max", o.n_max},
            {"m_max", o.m_max},
            {"tolerance", o.tolerance},
            {"steps_per_period", o.steps_per_period},
            {"max_step", o.max_step},
            {"divergence_guard", o.divergence_guard},
            {"budget_periods", o.budget_periods},
            {"early_accept", o.early_accept},
            {"chaos_threshold", o.chaos_threshold},
            {"chaos_fast_threshold", o.chaos_fast_threshold},
            {"chaos_confirm_periods", o.chaos_confirm_periods},
            {"min_measure_periods", o.min_measure_periods}};
}

ClassifyOptions classify_from_json(const json& j) {
    ClassifyOptions o;
    o.transient_periods = j.at("transient_periods").get<int>();
    o.test_periods = j.at("test_periods").get<int>();
    o.n_max = j.at("n_max").get<int>();
    o.m_max = j.at("m_max").get<int>();
    o.tolerance = j.at("tolerance").get<double>();
    o.steps_per_period = j.at("steps_per_period").get<int>();
    o.max_step = j.at("max_step").get<double>();
    o.divergence_guard = j.at("divergence_guard").get<double>();
    o.budget_periods = j.at("budget_periods").get<int>();
    o.early_accept = j.at("early_accept").get<bool>();
    o.chaos_threshold = j.at("chaos_threshold").get<double>();
    o.chaos_fast_threshold = j.at("chaos_fast_threshold").get<double>();
    o.chaos_confirm_periods = j.at("chaos_confirm_periods").get<int>();
    o.min_measure_periods = j.at("min_measure_periods").get<int>();
    return o;
}

json to_json(const GridMetadata& m) {
    return {{"kind", m.kind},
            {"code_version", m.code_version},
            {"classify", to_json(m.classify)}};
}

GridMetadata meta_from_json(const json& j) {
    GridMetadata m;
    m.kind = j.at("kind").get<std::string>();
    m.code_version = j.at("code_version").get<std::string>();
    m.classify = classify_from_json(j.at("classify"));
    return m;
}

OrbitClass::Kind kind_from_string(const std::string& s) {
    if (s == "Rotating") return OrbitClass::Kind::rotating;
    if (s == "Locked") return OrbitClass::Kind::locked;
    if (s == "Chaotic") return OrbitClass::Kind::chaotic;
    if (s == "Unclassified") return OrbitClass::Kind::unclassified;
    throw std::invalid_argument("unknown orbit class '" + s + "'");
}

std::string format_csv(const GridResult& g) {
    std::ostringstream out;
    out << "# grid-result v1\n";
    out << "# spec: " << to_json(g.spec).dump() << "\n";
    out << "# meta: " << to_json(g.meta).dump() << "\n";
    out << g.spec.axis0.name << ',' << g.spec.axis1.name << ",class,m,n,sign,residual\n";
    const int cols = g.cols();
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < cols; ++j) {
            const OrbitClass& c = g.at(i, j);
            out << fmt(g.spec.axis0.value(i)) << ',' << fmt(g.spec.axis1.value(j)) << ','
                << to_string(c.kind) << ',' << c.m << ',' << c.n << ',' << c.sign << ','
                << fmt(c.residual) << "\n";
        }
    }
    return out.str();
}

std::string format_json(const GridResult& g) {
    json cells = json::array();
    const int cols = g.cols();
    for (int i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < cols; ++j) {
            const OrbitClass& c = g.at(i, j);
            row.push_back({{"class", to_string(c.kind)},
                           {"m", c.m},
                           {"n", c.n},
                           {"sign", c.sign},
                           {"residual", num(c.residual)}});
        }
        cells.push_back(std::move(row));
    }
    json doc = {{"format", "grid-result v1"},
                {"spec", to_json(g.spec)},
                {"meta", to_json(g.meta)},
                {"cells", std::move(cells)}};
    return doc.dump(1) + "\n";
}

GridResult parse_json(const std::string& text) {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "grid-result v1")
        throw std::invalid_argument("parse_grid: unknown format tag");
    GridResult g;
    g.spec = spec_from_json(doc.at("spec"));
    g.meta = meta_from_json(doc.at("meta"));
    for (const json& row : doc.at("cells")) {
        for (const json& c : row) {
            OrbitClass oc;
            oc.kind = kind_from_string(c.at("class").get<std::string>());
            oc.m = c.at("m").get<int>();
            oc.n = c.at("n").get<int>();
            oc.sign = c.at("sign").get<int>();
            oc.residual = as_num(c.at("residual"));
            g.cells.push_back(oc);
        }
    }
    if (g.cells.size() != static_cast<size_t>(g.rows()) * g.cols())
        throw std::invalid_argument("parse_grid: cell count does not match the grid spec");
    return g;
}

GridResult parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GridResult g;
    bool have_spec = false, have_meta = false, have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# spec: ", 0) == 0) {
                g.spec = spec_from_json(json::parse(line.substr(8)));
                have_spec = true;
            } else if (line.rfind("# meta: ", 0) == 0) {
                g.meta = meta_from_json(json::parse(line.substr(8)));
                have_meta = true;
            }
            continue;
        }
        if (!have_header) {  // column header
            have_header = true;
            continue;
        }
        // axis0,axis1,class,m,n,sign,residual
        std::istringstream row(line);
        std::string field;
        OrbitClass c;
        int col = 0;
        while (std::getline(row, field, ',')) {
            switch (col) {
                case 2: c.kind = kind_from_string(field); break;
                case 3: c.m = std::stoi(field); break;
                case 4: c.n = std::stoi(field); break;
                case 5: c.sign = std::stoi(field); break;
                case 6: c.residual = std::strtod(field.c_str(), nullptr); break;
                default: break;
            }
            ++col;
        }
        if (col != 7) throw std::invalid_argument("parse_grid: malformed CSV row '" + line + "'");
        g.cells.push_back(c);
    }
    if (!have_spec || !have_meta || !have_header)
        throw std::invalid_argument("parse_grid: missing spec/meta/header in CSV");
    if (g.cells.size() != static_cast<size_t>(g.rows()) * g.cols())
        throw std::invalid_argument("parse_grid: cell count does not match the grid spec");
    return g;
}

} // namespace

std::string format_grid(const GridResult& g, GridFormat format) {
    return format == GridFormat::csv ? format_csv(g) : format_json(g);
}

GridResult parse_grid(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("parse_grid: empty input");
    return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

void write_grid(const GridResult& g, const std::string& path, GridFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_grid: cannot open " + path);
    out << format_grid(g, format);
    if (!out) throw std::runtime_error("write_grid: failed writing " + path);
}

GridResult read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_grid: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grid(buf.str());
}

} // namespace pinion
