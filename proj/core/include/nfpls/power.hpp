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

#ifndef NFPLS_POWER_HPP
#define NFPLS_POWER_HPP

#include "nfpls/channel.hpp"
#include "nfpls/linalg.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/stats.hpp"

#include <optional>

namespace nfpls::power {

using channel::ChannelModel;
using channel::ChannelVector;
using linalg::CVector;
using secrecy::OracleRoute;
using stats::LinkStats;

struct PowerOutcome {
    std::optional<double> power;  // empty: target rate unachievable at any power
    double xi = 0.0;
    double chi = 0.0;
    std::optional<CVector> direction;  // unit-norm transmit direction (oracle only)
    double principal_eigenvalue = 0.0;  // largest eigenvalue of Theta

    bool achievable() const noexcept { return power.has_value(); }
};

// Unachievable when 1 - rho <= 1e-12 and xi <= 0 (xi compared with a relative
// tolerance of 1e-12 of its two terms).
PowerOutcome min_power_closed(const LinkStats& stats, double noise_bob, double noise_eve, double target_rate);

PowerOutcome min_power_eigen_oracle(const ChannelVector& h_b, const ChannelVector& h_e, double noise_bob,
                                    double noise_eve, double target_rate, OracleRoute route = OracleRoute::span);

enum class LimitKind { infinite, zero, finite };

struct PowerLimit {
    LimitKind kind = LimitKind::finite;
    double value = 0.0;
};

// Large-M limit of the minimum power with equal noise at both receivers.
PowerLimit power_limit(ChannelModel model, const geometry::ArrayGeometry& arr, const geometry::NodeGeometry& b,
                       const geometry::NodeGeometry& e, double noise, double target_rate);

} // namespace nfpls::power

#endif
