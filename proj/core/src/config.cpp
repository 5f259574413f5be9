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

#include "nfpls/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace nfpls::sweep {
namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

// Recursive-descent evaluator over numbers, pi, unary +/-, * / + - and parentheses.
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    std::optional<double> parse()
    {
        auto v = expr();
        skip();
        if (!v || pos_ != s_.size() || !std::isfinite(*v)) return std::nullopt;
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::optional<double> expr()
    {
        auto v = term();
        while (v) {
            if (eat('+')) {
                auto r = term();
                if (!r) return std::nullopt;
                *v += *r;
            } else if (eat('-')) {
                auto r = term();
                if (!r) return std::nullopt;
                *v -= *r;
            } else {
                break;
            }
        }
        return v;
    }

    std::optional<double> term()
    {
        auto v = unary();
        while (v) {
            if (eat('*')) {
                auto r = unary();
                if (!r) return std::nullopt;
                *v *= *r;
            } else if (eat('/')) {
                auto r = unary();
                if (!r) return std::nullopt;
                *v /= *r;
            } else {
                break;
            }
        }
        return v;
    }

    std::optional<double> unary()
    {
        if (eat('-')) {
            auto v = unary();
            if (v) *v = -*v;
            return v;
        }
        if (eat('+')) return unary();
        return primary();
    }

    std::optional<double> primary()
    {
        skip();
        if (eat('(')) {
            auto v = expr();
            if (!v || !eat(')')) return std::nullopt;
            return v;
        }
        if (s_.compare(pos_, 2, "pi") == 0) {
            pos_ += 2;
            return kPi;
        }
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) return std::nullopt;
        // Reject hex floats, inf and nan spellings that strtod accepts.
        for (const char* p = begin; p < end; ++p)
            if (!(std::isdigit(static_cast<unsigned char>(*p)) || *p == '.' || *p == 'e' || *p == 'E' || *p == '+' ||
                  *p == '-'))
                return std::nullopt;
        pos_ += std::size_t(end - begin);
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

struct KeyHandler {
    std::function<void(SweepConfig&, const std::string&, const std::function<void(const std::string&)>&)> apply;
};

double number_or_fail(const std::string& v, const std::function<void(const std::string&)>& fail)
{
    auto x = evaluate_expression(v);
    if (!x) fail("value '" + v + "' is not numeric");
    return *x;
}

int integer_or_fail(const std::string& v, const std::function<void(const std::string&)>& fail)
{
    const double x = number_or_fail(v, fail);
    if (x != std::floor(x) || std::abs(x) > 1e9) fail("value '" + v + "' is not an integer");
    return int(x);
}

const std::map<std::string, KeyHandler>& handlers()
{
    using F = std::function<void(const std::string&)>;
    static const std::map<std::string, KeyHandler> h = {
        {"wavelength", {[](SweepConfig& c, const std::string& v, const F& f) { c.wavelength = number_or_fail(v, f); }}},
        {"spacing", {[](SweepConfig& c, const std::string& v, const F& f) { c.spacing = number_or_fail(v, f); }}},
        {"element_side",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.element_side = number_or_fail(v, f); }}},
        {"element_area",
         {[](SweepConfig& c, const std::string& v, const F& f) {
              const double a = number_or_fail(v, f);
              if (!(a > 0.0)) f("element_area must be positive");
              c.element_side = std::sqrt(a);
          }}},
        {"m_x", {[](SweepConfig& c, const std::string& v, const F& f) {
             c.m_x = integer_or_fail(v, f);
             if (c.m_x < 1 || c.m_x % 2 == 0) f("m_x must be a positive odd integer, got " + v);
         }}},
        {"m_z", {[](SweepConfig& c, const std::string& v, const F& f) {
             c.m_z = integer_or_fail(v, f);
             if (c.m_z < 1 || c.m_z % 2 == 0) f("m_z must be a positive odd integer, got " + v);
         }}},
        {"r_b", {[](SweepConfig& c, const std::string& v, const F& f) { c.r_b = number_or_fail(v, f); }}},
        {"theta_b", {[](SweepConfig& c, const std::string& v, const F& f) { c.theta_b = number_or_fail(v, f); }}},
        {"phi_b", {[](SweepConfig& c, const std::string& v, const F& f) { c.phi_b = number_or_fail(v, f); }}},
        {"r_e", {[](SweepConfig& c, const std::string& v, const F& f) { c.r_e = number_or_fail(v, f); }}},
        {"theta_e", {[](SweepConfig& c, const std::string& v, const F& f) { c.theta_e = number_or_fail(v, f); }}},
        {"phi_e", {[](SweepConfig& c, const std::string& v, const F& f) { c.phi_e = number_or_fail(v, f); }}},
        {"snr", {[](SweepConfig& c, const std::string& v, const F& f) { c.snr = number_or_fail(v, f); }}},
        {"snr_db",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.snr = std::pow(10.0, number_or_fail(v, f) / 10.0); }}},
        {"noise", {[](SweepConfig& c, const std::string& v, const F& f) { c.noise = number_or_fail(v, f); }}},
        {"noise_db",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.noise = std::pow(10.0, number_or_fail(v, f) / 10.0); }}},
        {"r0", {[](SweepConfig& c, const std::string& v, const F& f) { c.r0 = number_or_fail(v, f); }}},
        {"quadrature_order",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.quadrature_order = integer_or_fail(v, f); }}},
        {"gamma", {[](SweepConfig& c, const std::string& v, const F& f) { c.gamma = number_or_fail(v, f); }}},
        {"grid_var",
         {[](SweepConfig& c, const std::string& v, const F& f) {
              const auto& names = sweepable_variables();
              if (std::find(names.begin(), names.end(), v) == names.end())
                  f("grid_var '" + v + "' is not a sweepable variable");
              c.grid_variable = v;
          }}},
        {"grid_start", {[](SweepConfig& c, const std::string& v, const F& f) { c.grid_start = number_or_fail(v, f); }}},
        {"grid_stop", {[](SweepConfig& c, const std::string& v, const F& f) { c.grid_stop = number_or_fail(v, f); }}},
        {"grid_points",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.grid_points = integer_or_fail(v, f); }}},
        {"grid_scale",
         {[](SweepConfig& c, const std::string& v, const F& f) {
              if (v == "linear") c.grid_scale = GridScale::linear;
              else if (v == "log") c.grid_scale = GridScale::log;
              else if (v == "db" || v == "dB") c.grid_scale = GridScale::db;
              else f("grid_scale must be linear, log or db, got '" + v + "'");
          }}},
        {"perturbation_span",
         {[](SweepConfig& c, const std::string& v, const F& f) { c.perturbation_span = number_or_fail(v, f); }}},
        {"models",
         {[](SweepConfig& c, const std::string& v, const F& f) {
              try {
                  c.models = parse_model_list(v);
              } catch (const std::invalid_argument& e) {
                  f(e.what());
              }
          }}},
        {"out_dir", {[](SweepConfig& c, const std::string& v, const F&) { c.out_dir = v; }}},
        {"threads", {[](SweepConfig& c, const std::string& v, const F& f) { c.threads = integer_or_fail(v, f); }}},
        {"literal_forms",
         {[](SweepConfig& c, const std::string& v, const F& f) {
              if (v == "true" || v == "1") c.literal_forms = true;
              else if (v == "false" || v == "0") c.literal_forms = false;
              else f("literal_forms must be true or false");
          }}},
    };
    return h;
}

// Keys that set the same field; giving both is ambiguous.
const std::map<std::string, std::string>& aliases()
{
    static const std::map<std::string, std::string> a = {
        {"snr_db", "snr"}, {"noise_db", "noise"}, {"element_area", "element_side"}};
    return a;
}

} // namespace

ConfigError::ConfigError(std::string source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message),
      source_(std::move(source)), line_(line)
{
}

SweepConfig::SweepConfig()
    : theta_b(kPi / 3.0), phi_b(2.0 * kPi / 3.0), theta_e(kPi / 3.0), phi_e(2.0 * kPi / 3.0)
{
}

double SweepConfig::resolved_spacing() const { return spacing.value_or(wavelength / 2.0); }

double SweepConfig::resolved_element_side() const
{
    return element_side.value_or(wavelength / (2.0 * std::sqrt(kPi)));
}

std::optional<double> evaluate_expression(const std::string& text)
{
    if (trim(text).empty()) return std::nullopt;
    return ExprParser(text).parse();
}

std::vector<ChannelModel> parse_model_list(const std::string& text)
{
    std::vector<ChannelModel> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        const auto m = channel::parse_model(item);
        if (!m) throw std::invalid_argument("unknown channel model '" + item + "' (expected upw, usw, nusw)");
        bool dup = false;
        for (auto x : out) dup = dup || x == *m;
        if (!dup) out.push_back(*m);
    }
    if (out.empty()) throw std::invalid_argument("model list is empty");
    return out;
}

SweepConfig parse_config(std::istream& in, const std::string& source)
{
    SweepConfig cfg;
    std::map<std::string, int> seen;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(source, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto fail = [&](const std::string& msg) { throw ConfigError(source, line_no, msg); };
        const auto it = handlers().find(key);
        if (it == handlers().end()) fail("unknown key '" + key + "'");
        if (value.empty()) fail("missing value for '" + key + "'");
        const auto alias = aliases().find(key);
        const std::string canonical = alias == aliases().end() ? key : alias->second;
        if (auto prev = seen.find(canonical); prev != seen.end())
            fail("'" + key + "' repeats a setting from line " + std::to_string(prev->second));
        seen[canonical] = line_no;
        it->second.apply(cfg, value, fail);
        cfg.explicit_keys.insert(canonical);
    }
    validate(cfg, source);
    return cfg;
}

SweepConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    return parse_config(in, path);
}

void validate(const SweepConfig& c, const std::string& source)
{
    const auto fail = [&](const std::string& msg) { throw ConfigError(source, 0, msg); };
    if (!(c.wavelength > 0.0)) fail("wavelength must be positive");
    if (!(c.resolved_element_side() > 0.0)) fail("element size must be positive");
    if (!(c.resolved_spacing() >= c.resolved_element_side())) fail("spacing must be at least the element side");
    if (c.m_x < 1 || c.m_x % 2 == 0) fail("m_x must be a positive odd integer");
    if (c.m_z < 1 || c.m_z % 2 == 0) fail("m_z must be a positive odd integer");
    if (!(c.r_b > 0.0) || !(c.r_e > 0.0)) fail("node ranges must be positive");
    for (double a : {c.theta_b, c.phi_b, c.theta_e, c.phi_e})
        if (!(a > 0.0 && a < kPi)) fail("node angles must lie in (0, pi)");
    if (!(c.snr > 0.0)) fail("snr must be positive");
    if (!(c.noise > 0.0)) fail("noise must be positive");
    if (!(c.r0 > 0.0)) fail("r0 must be positive");
    if (c.quadrature_order < 10) fail("quadrature_order must be at least 10");
    if (!(c.gamma > 0.0 && c.gamma < 1.0)) fail("gamma must lie in (0, 1)");
    if (c.grid_points && *c.grid_points < 2) fail("grid_points must be at least 2");
    if (!(c.perturbation_span > 0.0)) fail("perturbation_span must be positive");
    if (c.threads < 1) fail("threads must be at least 1");
    if (c.grid_scale == GridScale::log && ((c.grid_start && *c.grid_start <= 0.0) || (c.grid_stop && *c.grid_stop <= 0.0)))
        fail("log grid needs positive bounds");
}

const std::vector<std::string>& sweepable_variables()
{
    static const std::vector<std::string> names = {"snr",     "snr_db",  "noise",   "noise_db", "m",
                                                   "m_x",     "m_z",     "r_b",     "r_e",      "r0",
                                                   "theta_b", "phi_b",   "theta_e", "phi_e",    "gamma"};
    return names;
}

std::string to_string(GridScale scale)
{
    switch (scale) {
    case GridScale::linear: return "linear";
    case GridScale::log: return "log";
    case GridScale::db: return "db";
    }
    return "linear";
}

std::string effective_config_text(const SweepConfig& c)
{
    std::ostringstream o;
    o << "# effective configuration\n";
    if (!c.experiment.empty()) o << "# experiment: " << c.experiment << '\n';
    o << "wavelength = " << fmt(c.wavelength) << '\n'
      << "spacing = " << fmt(c.resolved_spacing()) << '\n'
      << "element_side = " << fmt(c.resolved_element_side()) << '\n'
      << "# element_area = " << fmt(c.resolved_element_side() * c.resolved_element_side()) << '\n'
      << "m_x = " << c.m_x << '\n'
      << "m_z = " << c.m_z << '\n'
      << "r_b = " << fmt(c.r_b) << '\n'
      << "theta_b = " << fmt(c.theta_b) << '\n'
      << "phi_b = " << fmt(c.phi_b) << '\n'
      << "r_e = " << fmt(c.r_e) << '\n'
      << "theta_e = " << fmt(c.theta_e) << '\n'
      << "phi_e = " << fmt(c.phi_e) << '\n'
      << "snr = " << fmt(c.snr) << '\n'
      << "# snr_db = " << fmt(10.0 * std::log10(c.snr)) << '\n'
      << "noise = " << fmt(c.noise) << '\n'
      << "# noise_db = " << fmt(10.0 * std::log10(c.noise)) << '\n'
      << "r0 = " << fmt(c.r0) << '\n'
      << "quadrature_order = " << c.quadrature_order << '\n'
      << "gamma = " << fmt(c.gamma) << '\n';
    if (c.grid_variable) o << "grid_var = " << *c.grid_variable << '\n';
    if (c.grid_start) o << "grid_start = " << fmt(*c.grid_start) << '\n';
    if (c.grid_stop) o << "grid_stop = " << fmt(*c.grid_stop) << '\n';
    if (c.grid_points) o << "grid_points = " << *c.grid_points << '\n';
    if (c.grid_scale) o << "grid_scale = " << to_string(*c.grid_scale) << '\n';
    o << "perturbation_span = " << fmt(c.perturbation_span) << '\n';
    o << "models = ";
    for (std::size_t i = 0; i < c.models.size(); ++i) o << (i ? "," : "") << channel::to_string(c.models[i]);
    o << '\n'
      << "out_dir = " << c.out_dir << '\n'
      << "threads = " << c.threads << '\n'
      << "literal_forms = " << (c.literal_forms ? "true" : "false") << '\n';
    return o.str();
}

} // namespace nfpls::sweep
