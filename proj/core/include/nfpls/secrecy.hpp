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

#ifndef NFPLS_SECRECY_HPP
#define NFPLS_SECRECY_HPP

#include "nfpls/channel.hpp"
#include "nfpls/linalg.hpp"
#include "nfpls/special_fn.hpp"
#include "nfpls/stats.hpp"

#include <optional>

namespace nfpls::secrecy {

using channel::ChannelModel;
using channel::ChannelVector;
using linalg::CSpan;
using linalg::CVector;
using stats::LinkStats;

class LinkBudget {
public:
    LinkBudget(double power, double noise_bob, double noise_eve);
    // Equal noise at both receivers; power = snr * noise.
    static LinkBudget from_snr(double snr, double noise);

    double power() const noexcept { return power_; }
    double noise_bob() const noexcept { return noise_bob_; }
    double noise_eve() const noexcept { return noise_eve_; }
    double snr_bob() const noexcept { return power_ / noise_bob_; }
    double snr_eve() const noexcept { return power_ / noise_eve_; }
    LinkBudget with_power(double power) const { return {power, noise_bob_, noise_eve_}; }

private:
    double power_;
    double noise_bob_;
    double noise_eve_;
};

enum class Method { closed_form, eigen_oracle };

// span: analytic 2x2 reduction on the {h_b, h_e} subspace.
// dense: explicit M x M matrices and power iteration (M <= 400).
enum class OracleRoute { span, dense };

inline constexpr std::size_t kDenseOracleLimit = 400;

struct SecrecyOutcome {
    double capacity = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<CVector> beamformer;
    Method method = Method::closed_form;
    double principal_eigenvalue = 1.0;  // mu of Q_e^{-1/2} Q_b Q_e^{-1/2}
};

SecrecyOutcome secrecy_capacity_closed(const LinkStats& stats, const LinkBudget& budget);

SecrecyOutcome capacity_eigen_oracle(const ChannelVector& h_b, const ChannelVector& h_e, const LinkBudget& budget,
                                     OracleRoute route = OracleRoute::span);

CVector mrt_beamformer(CSpan h_b, double power);
CVector asymptotic_beamformer(CSpan h_b, CSpan h_e, double power);

// log2((1 + |h_b^H w|^2/s_b) / (1 + |h_e^H w|^2/s_e)), not clipped at zero.
double achieved_rate(CSpan h_b, CSpan h_e, CSpan w, const LinkBudget& budget);

enum class Regime { large_m, high_snr };

struct Asymptote {
    bool bounded = true;  // false: grows without bound, O(log2 M)
    double bits = 0.0;
};

Asymptote asymptotic_capacity(ChannelModel model, Regime regime, const geometry::ArrayGeometry& arr,
                              const geometry::NodeGeometry& b, const geometry::NodeGeometry& e,
                              const LinkBudget& budget, const special::QuadratureRule& rule);

} // namespace nfpls::secrecy

#endif
