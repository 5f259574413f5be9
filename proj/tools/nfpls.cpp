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

// nfpls command line: run sweeps, validate configs, run the self-test.
#include "nfpls/config.hpp"
#include "nfpls/error.hpp"
#include "nfpls/experiments.hpp"
#include "nfpls/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunOptions {
    std::string config;
    std::string out;
    std::optional<int> threads;
    std::string models;
};

nfpls::sweep::SweepConfig load(const std::string& path)
{
    if (path.empty()) return {};
    return nfpls::sweep::load_config(path);
}

int run(const std::string& experiment, const RunOptions& opt)
{
    using namespace nfpls::sweep;
    SweepConfig cfg;
    try {
        cfg = load(opt.config);
        if (!opt.out.empty()) {
            cfg.out_dir = opt.out;
            cfg.explicit_keys.insert("out_dir");
        }
        if (opt.threads) {
            if (*opt.threads < 1) throw ConfigError("--threads", 0, "must be at least 1");
            cfg.threads = *opt.threads;
        } else if (!cfg.is_set("threads")) {
            cfg.threads = int(std::max(1u, std::thread::hardware_concurrency()));
        }
        if (!opt.models.empty()) {
            try {
                cfg.models = parse_model_list(opt.models);
            } catch (const std::invalid_argument& e) {
                throw ConfigError("--models", 0, e.what());
            }
        }
        cfg = with_experiment_defaults(cfg, experiment);
        resolve_grid(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "nfpls: " << e.what() << '\n';
        return kExitUsage;
    }
    nfpls::diag::set_warning_handler([](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; });
    try {
        const auto tables = run_experiment(cfg);
        for (const auto& path : write_outputs(cfg, tables)) std::cout << path << '\n';
    } catch (const ConfigError& e) {
        std::cerr << "nfpls: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "nfpls: " << experiment << " failed: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Near-field physical-layer security analysis"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string chosen;
    for (const auto& name : nfpls::sweep::experiment_names()) {
        auto* sub = app.add_subcommand(name, "Run the " + name + " sweep");
        sub->add_option("--config", opt.config, "Config file (key = value lines)");
        sub->add_option("--out", opt.out, "Output directory");
        sub->add_option("--threads", opt.threads, "Worker threads");
        sub->add_option("--models", opt.models, "Comma-separated subset of upw,usw,nusw");
        sub->callback([&chosen, name] { chosen = name; });
    }

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Parse a config and print the effective values");
    validate->add_option("--config", validate_path, "Config file")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the oracle-agreement suite");
    int instances = 200;
    selftest->add_option("--instances", instances, "Random instances per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (validate->parsed()) {
        try {
            std::cout << nfpls::sweep::effective_config_text(nfpls::sweep::load_config(validate_path));
        } catch (const nfpls::sweep::ConfigError& e) {
            std::cerr << "nfpls: " << e.what() << '\n';
            return kExitUsage;
        }
        return 0;
    }
    if (selftest->parsed()) {
        try {
            return nfpls::run_selftest(std::cout, 20260101, instances);
        } catch (const std::exception& e) {
            std::cerr << "nfpls: selftest aborted: " << e.what() << '\n';
            return kExitFailure;
        }
    }
    return run(chosen, opt);
}
