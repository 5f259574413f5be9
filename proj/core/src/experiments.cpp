// SPDX-License-Identifier: Apache-2.0
//
// nfpls: near-field physical-layer security analysis
// Copyright (C) 2026 The nfpls authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfpls/experiments.hpp"

#include "nfpls/channel.hpp"
#include "nfpls/depth.hpp"
#include "nfpls/error.hpp"
#include "nfpls/geometry.hpp"
#include "nfpls/power.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/special_fn.hpp"
#include "nfpls/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

namespace nfpls::sweep {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
const std::string kSkipped = "skipped";

struct GridDefault {
    const char* variable;
    double start;
    double stop;
    int points;
    GridScale scale;
};

const std::map<std::string, GridDefault>& grid_defaults()
{
    static const std::map<std::string, GridDefault> d = {
        {"capacity_vs_snr", {"snr", 0.0, 80.0, 81, GridScale::db}},
        {"capacity_vs_M", {"m", 1.0, 1001.0, 21, GridScale::linear}},
        {"capacity_vs_re", {"r_e", 1.0, 100.0, 101, GridScale::log}},
        {"capacity_perturbation", {"dtheta", 0.0, 0.0, 41, GridScale::linear}},
        {"cospsi_vs_re", {"r_e", 1.0, 100.0, 101, GridScale::log}},
        {"depth_vs_M", {"m", 3.0, 201.0, 100, GridScale::linear}},
        {"power_vs_R0", {"r0", 0.1, 5.0, 50, GridScale::linear}},
        {"power_vs_re", {"r_e", 1.0, 100.0, 101, GridScale::log}},
        {"power_vs_M", {"m", 1.0, 1001.0, 21, GridScale::linear}},
    };
    return d;
}

int nearest_odd(double v)
{
    const double r = 2.0 * std::floor(v / 2.0) + 1.0;
    return int(std::max(1.0, r));
}

geometry::ArrayGeometry make_array(const SweepConfig& c)
{
    return {c.m_x, c.m_z, c.resolved_spacing(), c.resolved_element_side(), c.wavelength};
}

stats::FormVariant variant_of(const SweepConfig& c)
{
    return c.literal_forms ? stats::FormVariant::literal : stats::FormVariant::corrected;
}

bool oracle_tractable(const SweepConfig& c) { return c.m_x * c.m_z <= kOracleElementLimit; }

Cell number(double v) { return v; }

Cell power_cell(const power::PowerOutcome& p) { return p.power ? Cell{*p.power} : Cell{kInf}; }

// One CSV row without the grid column.
std::vector<Cell> evaluate_point(const std::string& exp, ChannelModel model, const SweepConfig& c)
{
    const auto arr = make_array(c);
    const geometry::NodeGeometry bob(c.r_b, c.theta_b, c.phi_b);
    const geometry::NodeGeometry eve(c.r_e, c.theta_e, c.phi_e);
    const special::QuadratureRule rule(c.quadrature_order);
    const auto budget = secrecy::LinkBudget::from_snr(c.snr, c.noise);
    const bool oracle = oracle_tractable(c);

    const auto closed_stats = [&] { return stats::closed_form_stats(model, arr, bob, eve, rule, variant_of(c)); };
    const auto channels = [&] {
        return std::pair{channel::build_channel(model, arr, bob), channel::build_channel(model, arr, eve)};
    };

    if (exp == "capacity_vs_snr" || exp == "capacity_vs_M" || exp == "capacity_vs_re" ||
        exp == "capacity_perturbation") {
        const double closed = secrecy::secrecy_capacity_closed(closed_stats(), budget).capacity;
        Cell oracle_cell = kSkipped;
        if (oracle) {
            const auto [hb, he] = channels();
            oracle_cell = secrecy::capacity_eigen_oracle(hb, he, budget, secrecy::OracleRoute::dense).capacity;
        }
        if (exp == "capacity_perturbation") return {closed, oracle_cell};
        const auto regime = exp == "capacity_vs_M" ? secrecy::Regime::large_m : secrecy::Regime::high_snr;
        double asym = kNaN;
        if (exp != "capacity_vs_re") {
            const auto a = secrecy::asymptotic_capacity(model, regime, arr, bob, eve, budget, rule);
            asym = a.bounded ? a.bits : kInf;
        }
        return {closed, oracle_cell, asym};
    }
    if (exp == "cospsi_vs_re") {
        const double closed = depth::cos_psi(closed_stats().correlation);
        Cell oracle_cell = kSkipped;
        if (oracle) {
            const auto [hb, he] = channels();
            try {
                oracle_cell = depth::cos_psi_numeric(hb, he);
            } catch (const DegenerateInputError&) {
                oracle_cell = kNaN;  // parallel channels leave the asymptotic beamformer undefined
            }
        }
        return {closed, oracle_cell, number(kNaN)};
    }
    if (exp == "depth_vs_M") {
        double closed = kInf;
        double m_s = kNaN;
        double m_s_literal = kNaN;
        const auto report = depth::depth_closed(arr, bob, c.gamma);
        m_s = report.m_s;
        m_s_literal = report.m_s_literal;
        // Co-directional plane waves never decorrelate, so the depth is unbounded.
        if (model != ChannelModel::upw) closed = report.depth;
        Cell oracle_cell = kSkipped;
        if (oracle) oracle_cell = depth::depth_scan(arr, bob, c.gamma, model).depth;
        return {closed, oracle_cell, m_s, m_s_literal};
    }
    // Power experiments.
    const auto closed = power::min_power_closed(closed_stats(), c.noise, c.noise, c.r0);
    Cell oracle_cell = kSkipped;
    if (oracle) {
        const auto [hb, he] = channels();
        oracle_cell = power_cell(
            power::min_power_eigen_oracle(hb, he, c.noise, c.noise, c.r0, secrecy::OracleRoute::dense));
    }
    double asym = kNaN;
    if (exp == "power_vs_M") {
        const auto lim = power::power_limit(model, arr, bob, eve, c.noise, c.r0);
        asym = lim.kind == power::LimitKind::infinite ? kInf : lim.kind == power::LimitKind::zero ? 0.0 : lim.value;
    }
    return {power_cell(closed), oracle_cell, asym};
}

std::vector<std::string> value_headers(const std::string& exp)
{
    if (exp == "capacity_perturbation") return {"capacity_closed", "capacity_oracle", "capacity_normalized"};
    if (exp == "cospsi_vs_re") return {"cos_psi_closed", "cos_psi_oracle", "cos_psi_asymptote"};
    if (exp == "depth_vs_M") return {"depth_closed", "depth_oracle", "m_s", "m_s_literal"};
    if (exp.rfind("power_", 0) == 0) return {"power_closed", "power_oracle", "power_asymptote"};
    return {"capacity_closed", "capacity_oracle", "capacity_asymptote"};
}

struct Task {
    std::size_t model_index;
    std::size_t point_index;
    SweepConfig config;
    std::vector<Cell> lead;  // grid cells
};

// Runs every task on a fixed pool; slot i receives task i so order never depends on scheduling.
std::vector<std::vector<Cell>> run_tasks(const std::string& exp, const std::vector<ChannelModel>& models,
                                         const std::vector<Task>& tasks, int threads)
{
    std::vector<std::vector<Cell>> slots(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                slots[i] = evaluate_point(exp, models[tasks[i].model_index], tasks[i].config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(std::size_t(std::max(threads, 1)), tasks.size());
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return slots;
}

std::vector<double> spaced(double start, double stop, int points, GridScale scale)
{
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = double(i) / double(points - 1);
        if (scale == GridScale::log) v[std::size_t(i)] = start * std::pow(stop / start, t);
        else v[std::size_t(i)] = start + (stop - start) * t;
    }
    if (scale == GridScale::log) {
        v.front() = start;
        v.back() = stop;
    }
    return v;
}

} // namespace

const std::vector<std::string>& experiment_names()
{
    static const std::vector<std::string> names = {"capacity_vs_snr", "capacity_vs_M", "capacity_vs_re",
                                                   "capacity_perturbation", "cospsi_vs_re", "depth_vs_M",
                                                   "power_vs_R0", "power_vs_re", "power_vs_M"};
    return names;
}

bool is_experiment(const std::string& name)
{
    const auto& n = experiment_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

SweepConfig with_experiment_defaults(SweepConfig cfg, const std::string& experiment)
{
    if (!is_experiment(experiment)) throw ConfigError("<experiment>", 0, "unknown experiment '" + experiment + "'");
    cfg.experiment = experiment;
    if (experiment == "capacity_vs_M" || experiment == "power_vs_M") {
        if (!cfg.is_set("theta_e")) cfg.theta_e = 2.0 * kPi / 3.0;
        if (!cfg.is_set("phi_e")) cfg.phi_e = kPi / 3.0;
    }
    if (experiment == "cospsi_vs_re" || experiment == "depth_vs_M") {
        for (auto [key, field] : {std::pair{"theta_b", &cfg.theta_b}, std::pair{"phi_b", &cfg.phi_b},
                                  std::pair{"theta_e", &cfg.theta_e}, std::pair{"phi_e", &cfg.phi_e}})
            if (!cfg.is_set(key)) *field = kPi / 2.0;
    }
    if (experiment == "capacity_perturbation") {
        if (!cfg.grid_points) cfg.grid_points = grid_defaults().at(experiment).points;
        return cfg;
    }
    const auto& d = grid_defaults().at(experiment);
    // A different sweep variable discards the default bounds entirely.
    const bool same_var = !cfg.grid_variable || *cfg.grid_variable == d.variable;
    if (!cfg.grid_variable) cfg.grid_variable = d.variable;
    if (same_var) {
        if (!cfg.grid_scale) cfg.grid_scale = d.scale;
        if (!cfg.grid_start) cfg.grid_start = d.start;
        if (!cfg.grid_stop) cfg.grid_stop = d.stop;
        if (!cfg.grid_points) cfg.grid_points = d.points;
    } else {
        if (!cfg.grid_scale) cfg.grid_scale = GridScale::linear;
        if (!cfg.grid_start || !cfg.grid_stop)
            throw ConfigError("<config>", 0, "grid_start and grid_stop are required when grid_var is changed");
        if (!cfg.grid_points) cfg.grid_points = d.points;
    }
    return cfg;
}

Grid resolve_grid(const SweepConfig& cfg)
{
    Grid g;
    if (cfg.experiment == "capacity_perturbation") {
        g.variable = "dtheta";
        g.column = "dtheta";
        g.values = spaced(-cfg.perturbation_span, cfg.perturbation_span, cfg.grid_points.value_or(41),
                          GridScale::linear);
        return g;
    }
    if (!cfg.grid_variable || !cfg.grid_start || !cfg.grid_stop || !cfg.grid_points || !cfg.grid_scale)
        throw ConfigError("<config>", 0, "grid is incomplete; call with_experiment_defaults first");
    g.variable = *cfg.grid_variable;
    g.scale = *cfg.grid_scale;
    const auto& names = sweepable_variables();
    if (std::find(names.begin(), names.end(), g.variable) == names.end())
        throw ConfigError("<config>", 0, "grid_var '" + g.variable + "' is not a sweepable variable");
    if (*cfg.grid_points < 2) throw ConfigError("<config>", 0, "grid_points must be at least 2");
    if (g.scale == GridScale::db) {
        if (g.variable != "snr" && g.variable != "noise")
            throw ConfigError("<config>", 0, "db grids apply only to snr and noise");
        g.column = g.variable + "_db";
    } else {
        g.column = g.variable;
    }
    if (g.scale == GridScale::log && !(*cfg.grid_start > 0.0 && *cfg.grid_stop > 0.0))
        throw ConfigError("<config>", 0, "log grid needs positive bounds");
    g.values = spaced(*cfg.grid_start, *cfg.grid_stop, *cfg.grid_points, g.scale);
    if (g.variable == "m" || g.variable == "m_x" || g.variable == "m_z") {
        for (double& v : g.values) v = nearest_odd(v);
        g.values.erase(std::unique(g.values.begin(), g.values.end()), g.values.end());
    }
    return g;
}

void apply_grid_value(SweepConfig& c, const Grid& grid, double v)
{
    const std::string& var = grid.variable;
    const double linear = grid.scale == GridScale::db ? std::pow(10.0, v / 10.0) : v;
    if (var == "snr") c.snr = linear;
    else if (var == "snr_db") c.snr = std::pow(10.0, v / 10.0);
    else if (var == "noise") c.noise = linear;
    else if (var == "noise_db") c.noise = std::pow(10.0, v / 10.0);
    else if (var == "m") c.m_x = c.m_z = nearest_odd(v);
    else if (var == "m_x") c.m_x = nearest_odd(v);
    else if (var == "m_z") c.m_z = nearest_odd(v);
    else if (var == "r_b") c.r_b = v;
    else if (var == "r_e") c.r_e = v;
    else if (var == "r0") c.r0 = v;
    else if (var == "theta_b") c.theta_b = v;
    else if (var == "phi_b") c.phi_b = v;
    else if (var == "theta_e") c.theta_e = v;
    else if (var == "phi_e") c.phi_e = v;
    else if (var == "gamma") c.gamma = v;
    else throw ConfigError("<config>", 0, "grid_var '" + var + "' is not a sweepable variable");
}

std::vector<ExperimentTable> run_experiment(const SweepConfig& cfg)
{
    const std::string& exp = cfg.experiment;
    if (!is_experiment(exp)) throw ConfigError("<experiment>", 0, "unknown experiment '" + exp + "'");
    const Grid grid = resolve_grid(cfg);
    const bool perturbation = exp == "capacity_perturbation";

    std::vector<Task> tasks;
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        std::size_t idx = 0;
        if (perturbation) {
            for (double dt : grid.values)
                for (double dp : grid.values) {
                    SweepConfig c = cfg;
                    c.theta_e = cfg.theta_b + dt;
                    c.phi_e = cfg.phi_b + dp;
                    tasks.push_back({mi, idx++, std::move(c), {dt, dp}});
                }
        } else {
            for (double v : grid.values) {
                SweepConfig c = cfg;
                apply_grid_value(c, grid, v);
                tasks.push_back({mi, idx++, std::move(c), {v}});
            }
        }
    }
    const auto slots = run_tasks(exp, cfg.models, tasks, cfg.threads);

    std::vector<std::string> header = perturbation ? std::vector<std::string>{"dtheta", "dphi"}
                                                   : std::vector<std::string>{grid.column};
    for (auto& h : value_headers(exp)) header.push_back(h);

    std::vector<ExperimentTable> out;
    for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
        CsvTable table(header);
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            if (tasks[i].model_index == mi) rows.push_back(i);
        double peak = 0.0;
        if (perturbation)
            for (auto i : rows) peak = std::max(peak, std::get<double>(slots[i][0]));
        for (auto i : rows) {
            std::vector<Cell> row = tasks[i].lead;
            row.insert(row.end(), slots[i].begin(), slots[i].end());
            if (perturbation) row.push_back(peak > 0.0 ? std::get<double>(slots[i][0]) / peak : kNaN);
            table.add_row(std::move(row));
        }
        out.push_back({cfg.models[mi], std::move(table)});
    }
    return out;
}

std::vector<std::string> write_outputs(const SweepConfig& cfg, const std::vector<ExperimentTable>& tables)
{
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    std::vector<std::string> paths;
    for (const auto& t : tables) {
        const auto path = (fs::path(cfg.out_dir) / (cfg.experiment + "_" + std::string(channel::to_string(t.model)) +
                                                    ".csv"))
                              .string();
        t.table.save(path);
        paths.push_back(path);
    }
    const auto echo = (fs::path(cfg.out_dir) / (cfg.experiment + ".effective.cfg")).string();
    std::ofstream o(echo, std::ios::binary | std::ios::trunc);
    o << effective_config_text(cfg);
    if (!o) throw std::runtime_error("cannot write " + echo);
    paths.push_back(echo);
    return paths;
}

} // namespace nfpls::sweep
