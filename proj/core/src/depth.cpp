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

#include "nfpls/depth.hpp"

#include "nfpls/error.hpp"
#include "nfpls/linalg.hpp"
#include "nfpls/secrecy.hpp"
#include "nfpls/special_fn.hpp"
#include "nfpls/stats.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace nfpls::depth {
namespace {

void check_gamma(double gamma)
{
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("depth threshold Gamma must lie in (0, 1)");
}

bool at_boresight(const NodeGeometry& n)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    return std::abs(n.theta() - half_pi) < 1e-9 && std::abs(n.phi() - half_pi) < 1e-9;
}

} // namespace

double cos_psi(double rho)
{
    if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("cos_psi: correlation must lie in [0, 1]");
    return 1.0 - rho;
}

double cos_psi_numeric(const ChannelVector& h_b, const ChannelVector& h_e)
{
    const auto wm = secrecy::mrt_beamformer(h_b.entries(), 1.0);
    const auto wa = secrecy::asymptotic_beamformer(h_b.entries(), h_e.entries(), 1.0);
    return std::norm(linalg::inner(wm, wa)) / (linalg::norm_squared(wm) * linalg::norm_squared(wa));
}

double upsilon_function(double u)
{
    if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError("upsilon_function: argument must be finite and >= 0");
    if (u < 1e-8) return 1.0;
    const special::Complex z = std::sqrt(std::numbers::pi) * std::polar(1.0, std::numbers::pi / 4.0) * u;
    const double m = std::abs(special::erf(z)) / (2.0 * u);
    return m * m * m * m;
}

double upsilon_threshold(double target)
{
    if (!(target > 0.0 && target < 1.0)) throw DomainError("upsilon_threshold: target must lie in (0, 1)");
    // Walk outward until the function drops below the target, then bisect.
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    for (double u = 0.005; u < 1e4; u += std::max(0.005, 0.005 * u)) {
        if (upsilon_function(u) < target) {
            hi = u;
            bracketed = true;
            break;
        }
        lo = u;
    }
    if (!bracketed) throw NumericalError("upsilon_threshold: no crossing found below u = 1e4");
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (upsilon_function(mid) >= target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

DepthReport depth_closed(const ArrayGeometry& arr, const NodeGeometry& bob, double gamma)
{
    check_gamma(gamma);
    if (arr.m_x() != arr.m_z() || !at_boresight(bob))
        throw ScopeError("depth_closed covers square arrays with boresight users only; use depth_scan");
    const double lam = arr.wavelength(), d = arr.spacing(), rb = bob.range();
    DepthReport rep;
    rep.threshold = gamma;
    // 1 - rho <= Gamma  <=>  upsilon_function(u) >= 1 - Gamma.
    rep.upsilon = upsilon_threshold(1.0 - gamma);
    const double u2 = rep.upsilon * rep.upsilon;
    const double rs = arr.m_total() * d * d / (4.0 * lam * u2);
    rep.security_radius = rs;
    rep.m_s = 4.0 * lam * u2 * rb / (d * d);
    rep.m_s_literal = 4.0 * lam * rep.upsilon * rb / (d * d);
    rep.r_min = rb * rs / (rs + rb);
    if (rb < rs) {
        rep.r_max = rb * rs / (rs - rb);
        rep.depth = 2.0 * rb * rb * rs / (rs * rs - rb * rb);
    }
    return rep;
}

DepthReport depth_scan(const ArrayGeometry& arr, const NodeGeometry& bob, double gamma, ChannelModel model,
                       const ScanOptions& options)
{
    check_gamma(gamma);
    if (options.points < 2 || !(options.span_factor > 1.0) || options.bisection_steps < 1)
        throw DomainError("depth_scan: invalid scan options");
    const auto hb = channel::build_channel(model, arr, bob);
    const double rb = bob.range();
    // Excess of 1 - rho over the threshold; negative inside the insecure interval.
    auto excess = [&](double re) {
        const auto he = channel::build_channel(model, arr, bob.at_range(re));
        return 1.0 - stats::rho_direct(hb, he).correlation - gamma;
    };
    auto refine = [&](double inside, double outside) {
        for (int i = 0; i < options.bisection_steps; ++i) {
            const double mid = std::sqrt(inside * outside);
            (excess(mid) <= 0.0 ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    };

    const int n = options.points;
    const double lo = rb / options.span_factor, hi = rb * options.span_factor;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid[std::size_t(i)] = lo * std::pow(hi / lo, double(i) / (n - 1));

    DepthReport rep;
    rep.threshold = gamma;
    rep.r_min = lo;
    double inside = rb;
    for (int i = n - 1; i >= 0; --i) {
        const double r = grid[std::size_t(i)];
        if (r >= rb) continue;
        if (excess(r) > 0.0) {
            rep.r_min = refine(inside, r);
            break;
        }
        inside = r;
    }
    inside = rb;
    for (int i = 0; i < n; ++i) {
        const double r = grid[std::size_t(i)];
        if (r <= rb) continue;
        if (excess(r) > 0.0) {
            rep.r_max = refine(inside, r);
            break;
        }
        inside = r;
    }
    rep.depth = rep.right_infinite() ? DepthReport::kInf : rep.r_max - rep.r_min;
    return rep;
}

} // namespace nfpls::depth
