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

#ifndef NFPLS_CONFIG_HPP
#define NFPLS_CONFIG_HPP

#include "nfpls/channel.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfpls::sweep {

using channel::ChannelModel;

// Config problem with the 1-based line it came from (0 when not tied to a line).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, int line, const std::string& message);
    int line() const noexcept { return line_; }
    const std::string& source() const noexcept { return source_; }

private:
    std::string source_;
    int line_;
};

enum class GridScale { linear, log, db };

struct GridSpec {
    std::string variable;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    GridScale scale = GridScale::linear;
};

// Everything a run needs. Fields hold the section V baseline until set.
struct SweepConfig {
    std::string experiment;

    double wavelength = 0.125;
    std::optional<double> spacing;       // default lambda/2
    std::optional<double> element_side;  // default sqrt(lambda^2/(4 pi))
    int m_x = 51;
    int m_z = 51;

    double r_b = 10.0;
    double theta_b;
    double phi_b;
    double r_e = 20.0;
    double theta_e;
    double phi_e;

    double snr = 1e4;      // P / sigma^2
    double noise = 0.1;    // sigma^2 in watts, equal at both receivers
    double r0 = 1.0;       // target secrecy rate, bits per channel use
    int quadrature_order = 100;
    double gamma = 0.5;    // depth-of-insecurity threshold

    std::optional<std::string> grid_variable;
    std::optional<double> grid_start;
    std::optional<double> grid_stop;
    std::optional<int> grid_points;
    std::optional<GridScale> grid_scale;
    double perturbation_span = 0.05;  // half-width of the angular perturbation grid, radians

    std::vector<ChannelModel> models{ChannelModel::upw, ChannelModel::usw, ChannelModel::nusw};
    std::string out_dir = "results";
    int threads = 1;
    bool literal_forms = false;

    std::set<std::string> explicit_keys;  // keys given in the file or on the command line

    SweepConfig();

    double resolved_spacing() const;
    double resolved_element_side() const;
    bool is_set(const std::string& key) const { return explicit_keys.count(key) != 0; }
};

// Parses "key = value" lines; '#' starts a comment. Throws ConfigError.
SweepConfig parse_config(std::istream& in, const std::string& source = "<config>");
SweepConfig load_config(const std::string& path);

// Validates cross-field invariants (odd counts, positive ranges, angles, grid).
void validate(const SweepConfig& cfg, const std::string& source = "<config>");

// Parses a comma-separated model list such as "upw,nusw".
std::vector<ChannelModel> parse_model_list(const std::string& text);

// Arithmetic value syntax accepted in config files: numbers, pi, + - * / and parentheses.
std::optional<double> evaluate_expression(const std::string& text);

// Canonical "key = value" rendering of every field, including derived ones.
std::string effective_config_text(const SweepConfig& cfg);

std::string to_string(GridScale scale);

// Names accepted by grid_var.
const std::vector<std::string>& sweepable_variables();

} // namespace nfpls::sweep

#endif
