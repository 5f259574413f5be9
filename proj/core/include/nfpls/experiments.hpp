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

#ifndef NFPLS_EXPERIMENTS_HPP
#define NFPLS_EXPERIMENTS_HPP

#include "nfpls/config.hpp"
#include "nfpls/csv.hpp"

#include <string>
#include <vector>

namespace nfpls::sweep {

// Oracle columns hold "skipped" above this many elements.
inline constexpr int kOracleElementLimit = 400;

const std::vector<std::string>& experiment_names();
bool is_experiment(const std::string& name);

// Fills experiment-specific defaults (grid, node placement) for keys the user left unset.
SweepConfig with_experiment_defaults(SweepConfig cfg, const std::string& experiment);

struct Grid {
    std::string variable;
    std::string column;          // header of the first CSV column
    std::vector<double> values;  // what the column shows (dB for a db grid)
    GridScale scale = GridScale::linear;
};

// The sweep axis of a defaulted config. Throws ConfigError on an invalid grid.
Grid resolve_grid(const SweepConfig& cfg);

// Writes one grid value into the config (dB conversion, odd rounding of counts).
void apply_grid_value(SweepConfig& cfg, const Grid& grid, double value);

struct ExperimentTable {
    ChannelModel model;
    CsvTable table;
};

// Runs cfg.experiment over its grid on cfg.threads workers. Output is independent of the thread count.
std::vector<ExperimentTable> run_experiment(const SweepConfig& cfg);

// Writes <out>/<experiment>_<model>.csv and <out>/<experiment>.effective.cfg; returns the paths.
std::vector<std::string> write_outputs(const SweepConfig& cfg, const std::vector<ExperimentTable>& tables);

} // namespace nfpls::sweep

#endif
