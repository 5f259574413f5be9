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

#include "nfpls/selftest.hpp"

#include "nfpls/channel.hpp"
#include "nfpls/depth.hpp"
#include "nfpls/power.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/stats.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

namespace nfpls {
namespace {

struct Instance {
    channel::ChannelVector h_b;
    channel::ChannelVector h_e;
    double snr;
    double noise;
};

Instance draw(std::mt19937_64& rng)
{
    using std::numbers::pi;
    std::uniform_int_distribution<int> half(0, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_real_distribution<double> angle(0.2, pi - 0.2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int mx = 2 * half(rng) + 1;
    const int mz = 2 * half(rng) + 1;
    const auto arr = geometry::ArrayGeometry::half_wavelength(mx, mz, 0.125);
    const auto model = channel::kAllModels[pick(rng)];
    const geometry::NodeGeometry b(2.0 + 48.0 * unit(rng), angle(rng), angle(rng));
    const geometry::NodeGeometry e(2.0 + 48.0 * unit(rng), angle(rng), angle(rng));
    const double snr = std::pow(10.0, -1.0 + 7.0 * unit(rng));
    return {channel::build_channel(model, arr, b), channel::build_channel(model, arr, e), snr, 0.1};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

int run_selftest(std::ostream& out, std::uint64_t seed, int instances)
{
    std::mt19937_64 rng(seed);
    const auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    double worst_cap = 0.0;
    double worst_abs = 0.0;
    double worst_pow = 0.0;
    double worst_lemma = 0.0;
    int verdict_mismatch = 0;
    for (int i = 0; i < instances; ++i) {
        const auto inst = draw(rng);
        const auto s = stats::rho_direct(inst.h_b, inst.h_e);
        const auto budget = secrecy::LinkBudget::from_snr(inst.snr, inst.noise);
        const double c_closed = secrecy::secrecy_capacity_closed(s, budget).capacity;
        const double c_oracle =
            secrecy::capacity_eigen_oracle(inst.h_b, inst.h_e, budget, secrecy::OracleRoute::dense).capacity;
        worst_cap = std::max(worst_cap, std::abs(c_closed - c_oracle) > 1e-12 ? rel(c_closed, c_oracle) : 0.0);
        worst_abs = std::max(worst_abs, std::abs(c_closed - c_oracle));

        const auto p_closed = power::min_power_closed(s, inst.noise, inst.noise, 1.0);
        const auto p_oracle =
            power::min_power_eigen_oracle(inst.h_b, inst.h_e, inst.noise, inst.noise, 1.0, secrecy::OracleRoute::dense);
        if (p_closed.achievable() != p_oracle.achievable()) ++verdict_mismatch;
        else if (p_closed.achievable()) worst_pow = std::max(worst_pow, rel(*p_closed.power, *p_oracle.power));

        if (1.0 - s.correlation > 1e-9)
            worst_lemma = std::max(worst_lemma,
                                   std::abs(depth::cos_psi_numeric(inst.h_b, inst.h_e) - (1.0 - s.correlation)));
    }
    const auto line = [&](bool ok, const std::string& what) {
        out << (ok ? "PASS " : "FAIL ") << what << '\n';
        if (!ok) ++failures;
    };
    char buf[160];
    std::snprintf(buf, sizeof buf, "capacity closed form vs eigen oracle: worst relative %.3e, absolute %.3e bits (%d instances)",
                  worst_cap, worst_abs, instances);
    line(worst_cap <= 1e-9, buf);
    std::snprintf(buf, sizeof buf, "minimum power closed form vs eigen oracle: worst relative %.3e, %d verdict mismatches",
                  worst_pow, verdict_mismatch);
    line(worst_pow <= 1e-9 && verdict_mismatch == 0, buf);
    std::snprintf(buf, sizeof buf, "cos psi identity: worst absolute %.3e", worst_lemma);
    line(worst_lemma <= 1e-9, buf);
    const double u = depth::upsilon_threshold(0.5);
    std::snprintf(buf, sizeof buf, "3 dB threshold root: %.6f (residual %.2e)", u,
                  std::abs(depth::upsilon_function(u) - 0.5));
    line(std::abs(u - 0.79) <= 0.005 && std::abs(depth::upsilon_function(u) - 0.5) <= 1e-6, buf);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (failures ? "selftest failed" : "selftest passed") << " in " << secs << " s\n";
    return failures ? 1 : 0;
}

} // namespace nfpls
