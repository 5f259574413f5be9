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

#include "nfpls/power.hpp"

#include "nfpls/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nfpls::power {
namespace {

using Complex = std::complex<double>;

constexpr double kUnitCorrelationTol = 1e-12;
constexpr double kRelativeZero = 1e-12;

void check_rate(double r0)
{
    if (!(r0 > 0.0) || !std::isfinite(r0)) throw DomainError("target secrecy rate must be positive");
}

void check_noise(double nb, double ne)
{
    if (!(nb > 0.0) || !(ne > 0.0)) throw DomainError("noise powers must be positive");
}

// Largest eigenvalue of the Hermitian 2x2 [[a, b], [conj b, c]] with a*c - |b|^2 <= 0.
double largest_2x2(double tr, double det)
{
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    if (tr >= 0.0) return 0.5 * (tr + disc);
    return 2.0 * det / (tr - disc);
}

} // namespace

PowerOutcome min_power_closed(const LinkStats& s, double noise_bob, double noise_eve, double target_rate)
{
    check_rate(target_rate);
    check_noise(noise_bob, noise_eve);
    const double two_r = std::exp2(target_rate);
    const double tb = s.gain_bob / noise_bob;
    const double te = two_r * s.gain_eve / noise_eve;
    const double one_minus_rho = 1.0 - s.correlation;

    PowerOutcome out;
    out.xi = tb - te;
    out.chi = 4.0 * two_r * s.gain_bob * s.gain_eve * one_minus_rho / (noise_bob * noise_eve);
    out.principal_eigenvalue = 0.5 * (out.xi + std::sqrt(out.xi * out.xi + out.chi));
    const bool parallel = one_minus_rho <= kUnitCorrelationTol;
    const bool xi_nonpositive = out.xi <= kRelativeZero * (tb + te);
    if (parallel && xi_nonpositive) return out;

    const double root = std::sqrt(out.xi * out.xi + out.chi);
    const double den = out.xi >= 0.0 ? out.xi + root : out.chi / (root - out.xi);
    if (!(den > 0.0)) return out;
    out.principal_eigenvalue = 0.5 * den;
    out.power = 2.0 * (two_r - 1.0) / den;
    return out;
}

PowerOutcome min_power_eigen_oracle(const ChannelVector& h_b, const ChannelVector& h_e, double noise_bob,
                                    double noise_eve, double target_rate, OracleRoute route)
{
    check_rate(target_rate);
    check_noise(noise_bob, noise_eve);
    if (h_b.size() != h_e.size()) throw DomainError("power oracle: channel vectors have different lengths");
    const double two_r = std::exp2(target_rate);
    const double sb = 1.0 / noise_bob;
    const double se = two_r / noise_eve;
    const double Gb = linalg::norm_squared(h_b.entries());
    const double Ge = linalg::norm_squared(h_e.entries());
    const double scale = sb * Gb + se * Ge;

    PowerOutcome out;
    out.xi = sb * Gb - se * Ge;
    const double rho = std::norm(linalg::inner(h_b.entries(), h_e.entries())) / (Gb * Ge);
    out.chi = 4.0 * sb * se * Gb * Ge * (1.0 - rho);

    double mu = 0.0;
    CVector dir;
    if (route == OracleRoute::span) {
        const auto s = linalg::span_basis(h_b.entries(), h_e.entries());
        const double B2 = s.bob_norm * s.bob_norm;
        const double n = s.residual_norm;
        // Theta = sb b b^H - se e e^H with b = (B, 0), e = (c, n).
        const double t11 = sb * B2 - se * std::norm(s.cross);
        const Complex t12 = -se * s.cross * n;
        const double t22 = -se * n * n;
        const double det = -sb * se * B2 * n * n;
        mu = largest_2x2(t11 + t22, det);
        Complex y1 = 1.0, y2 = 0.0;
        if (!s.q2.empty()) {
            const Complex a11 = t11 - mu, a22 = t22 - mu;
            if (std::norm(a11) + std::norm(t12) >= std::norm(t12) + std::norm(a22)) {
                y1 = t12;
                y2 = -a11;
            } else {
                y1 = a22;
                y2 = -std::conj(t12);
            }
            if (std::norm(y1) + std::norm(y2) == 0.0) {
                y1 = 1.0;
                y2 = 0.0;
            }
        }
        dir.resize(h_b.size());
        for (std::size_t i = 0; i < dir.size(); ++i)
            dir[i] = y1 * s.q1[i] + (s.q2.empty() ? Complex(0.0) : y2 * s.q2[i]);
    } else {
        if (h_b.size() > secrecy::kDenseOracleLimit)
            throw PreconditionError("dense power oracle is limited to M <= " +
                                    std::to_string(secrecy::kDenseOracleLimit));
        linalg::DenseHermitian theta(h_b.size());
        theta.add_outer(h_b.entries(), sb);
        theta.add_outer(h_e.entries(), -se);
        auto ep = linalg::largest_eigenpair(theta);
        mu = ep.value;
        dir = std::move(ep.vector);
    }

    out.principal_eigenvalue = mu;
    if (!(mu > kRelativeZero * scale)) return out;
    const double nd = std::sqrt(linalg::norm_squared(dir));
    for (auto& v : dir) v /= nd;
    out.power = (two_r - 1.0) / mu;
    out.direction = std::move(dir);
    return out;
}

PowerLimit power_limit(ChannelModel model, const geometry::ArrayGeometry& arr, const geometry::NodeGeometry& b,
                       const geometry::NodeGeometry& e, double noise, double target_rate)
{
    check_rate(target_rate);
    if (!(noise > 0.0)) throw DomainError("noise power must be positive");
    switch (model) {
    case ChannelModel::upw:
        if (geometry::same_direction(b, e) && e.range() <= std::exp2(0.5 * target_rate) * b.range() * (1.0 + 1e-12))
            return {LimitKind::infinite, std::numeric_limits<double>::infinity()};
        return {LimitKind::zero, 0.0};
    case ChannelModel::usw:
        return {LimitKind::zero, 0.0};
    case ChannelModel::nusw: {
        const double d = arr.spacing();
        return {LimitKind::finite, 2.0 * (std::exp2(target_rate) - 1.0) * d * d * noise / arr.element_area()};
    }
    }
    return {};
}

} // namespace nfpls::power
