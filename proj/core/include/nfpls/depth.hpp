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

#ifndef NFPLS_DEPTH_HPP
#define NFPLS_DEPTH_HPP

#include "nfpls/channel.hpp"
#include "nfpls/geometry.hpp"

#include <limits>

namespace nfpls::depth {

using channel::ChannelModel;
using channel::ChannelVector;
using geometry::ArrayGeometry;
using geometry::NodeGeometry;

// Squared cosine of the angle between the MRT and the asymptotic beamformer.
double cos_psi(double rho);
double cos_psi_numeric(const ChannelVector& h_b, const ChannelVector& h_e);

// |erf(sqrt(pi) e^{j pi/4} u) / (2u)|^4, the boresight USW correlation as a
// function of u = sqrt(M d^2/(4 lambda) |1/r_b - 1/r_e|). Equals 1 at u = 0.
double upsilon_function(double u);

// Smallest u > 0 with upsilon_function(u) = target, target in (0, 1).
double upsilon_threshold(double target);

struct DepthReport {
    static constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    static constexpr double kInf = std::numeric_limits<double>::infinity();

    double security_radius = kNaN;  // r_s; closed form only
    double r_min = kNaN;
    double r_max = kInf;            // infinite when the interval is unbounded
    double depth = kInf;
    double threshold = 0.5;         // Gamma
    double upsilon = kNaN;          // Upsilon at which 1 - rho = Gamma
    double m_s = kNaN;              // 4 lambda Upsilon^2 r_b / d^2
    double m_s_literal = kNaN;      // 4 lambda Upsilon r_b / d^2 (linear exponent)

    bool right_infinite() const noexcept { return r_max == kInf; }
};

// Square array with Bob and Eve at boresight only; anything else is a ScopeError.
DepthReport depth_closed(const ArrayGeometry& arr, const NodeGeometry& bob, double gamma);

struct ScanOptions {
    int points = 400;
    double span_factor = 50.0;
    int bisection_steps = 60;
};

// Co-directional Eve over a log grid of ranges; maximal interval around r_b with 1 - rho <= gamma.
DepthReport depth_scan(const ArrayGeometry& arr, const NodeGeometry& bob, double gamma, ChannelModel model,
                       const ScanOptions& options = {});

} // namespace nfpls::depth

#endif
