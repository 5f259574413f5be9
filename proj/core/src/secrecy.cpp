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

#include "nfpls/secrecy.hpp"

#include "nfpls/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace nfpls::secrecy {
namespace {

using Complex = std::complex<double>;

void check_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// Largest root of detE l^2 - p l + detK = 0 with detK <= 0, without cancellation.
double largest_root(double det_e, double p, double det_k)
{
    const double disc = std::sqrt(p * p - 4.0 * det_e * det_k);
    if (p >= 0.0) return (p + disc) / (2.0 * det_e);
    return 2.0 * det_k / (p - disc);
}

CVector combine(const linalg::SpanBasis& s, Complex y1, Complex y2)
{
    CVector w(s.q1.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = y1 * s.q1[i] + (s.q2.empty() ? Complex(0.0) : y2 * s.q2[i]);
    return w;
}

void rescale(CVector& w, double power)
{
    const double n = std::sqrt(linalg::norm_squared(w));
    for (auto& v : w) v *= std::sqrt(power) / n;
}

SecrecyOutcome oracle_span(const ChannelVector& h_b, const ChannelVector& h_e, const LinkBudget& budget)
{
    const auto s = linalg::span_basis(h_b.entries(), h_e.entries());
    const double gb = budget.snr_bob(), ge = budget.snr_eve();
    const double B2 = s.bob_norm * s.bob_norm;
    const double c2 = std::norm(s.cross);
    const double n2 = s.residual_norm * s.residual_norm;
    const double Ge = c2 + n2;

    // K = g_b b b^H - g_e e e^H, E = I + g_e e e^H in the basis where b = (B, 0), e = (c, n).
    const double det_e = 1.0 + ge * Ge;
    const double p = gb * B2 * (1.0 + ge * n2) - ge * Ge;
    const double det_k = -gb * ge * B2 * n2;
    const double lam = largest_root(det_e, p, det_k);

    SecrecyOutcome out;
    out.method = Method::eigen_oracle;
    out.alpha = p;
    out.beta = -det_k * det_e;
    out.principal_eigenvalue = 1.0 + lam;
    out.capacity = lam > 0.0 ? log2_1p(lam) : 0.0;
    if (lam > 0.0) {
        const Complex k11 = gb * B2 - ge * c2, k12 = -ge * s.cross * s.residual_norm, k22 = -ge * n2;
        const Complex e11 = 1.0 + ge * c2, e12 = ge * s.cross * s.residual_norm, e22 = 1.0 + ge * n2;
        const Complex a11 = k11 - lam * e11, a12 = k12 - lam * e12;
        const Complex a21 = std::conj(a12), a22 = k22 - lam * e22;
        Complex y1 = 1.0, y2 = 0.0;
        if (!s.q2.empty()) {
            if (std::norm(a11) + std::norm(a12) >= std::norm(a21) + std::norm(a22)) {
                y1 = a12;
                y2 = -a11;
            } else {
                y1 = a22;
                y2 = -a21;
            }
            if (std::norm(y1) + std::norm(y2) == 0.0) {
                y1 = 1.0;
                y2 = 0.0;
            }
        }
        CVector w = combine(s, y1, y2);
        rescale(w, budget.power());
        out.beamformer = std::move(w);
    }
    return out;
}

SecrecyOutcome oracle_dense(const ChannelVector& h_b, const ChannelVector& h_e, const LinkBudget& budget)
{
    const std::size_t M = h_b.size();
    if (M > kDenseOracleLimit)
        throw PreconditionError("dense eigen oracle is limited to M <= " + std::to_string(kDenseOracleLimit));
    const double gb = budget.snr_bob(), ge = budget.snr_eve();
    const auto qe = linalg::inverse_sqrt_identity_plus_outer(h_e.entries(), ge);
    const CVector ub = linalg::multiply(qe, h_b.entries());
    const CVector ue = linalg::multiply(qe, h_e.entries());

    // Delta - I = Q_e^{-1/2} (Q_b - Q_e) Q_e^{-1/2}
    linalg::DenseHermitian k(M);
    k.add_outer(ub, gb);
    k.add_outer(ue, -ge);
    const auto ep = linalg::largest_eigenpair(k);

    SecrecyOutcome out;
    out.method = Method::eigen_oracle;
    const double Gb = linalg::norm_squared(h_b.entries()), Ge = linalg::norm_squared(h_e.entries());
    const double one_minus_rho = 1.0 - std::norm(linalg::inner(h_b.entries(), h_e.entries())) / (Gb * Ge);
    out.alpha = gb * Gb - ge * Ge + gb * ge * Gb * Ge * one_minus_rho;
    out.beta = (1.0 + ge * Ge) * gb * ge * Gb * Ge * one_minus_rho;
    out.principal_eigenvalue = 1.0 + ep.value;
    out.capacity = ep.value > 0.0 ? log2_1p(ep.value) : 0.0;
    if (ep.value > 0.0) {
        CVector w = linalg::multiply(qe, ep.vector);
        rescale(w, budget.power());
        out.beamformer = std::move(w);
    }
    return out;
}

} // namespace

LinkBudget::LinkBudget(double power, double noise_bob, double noise_eve)
    : power_(power), noise_bob_(noise_bob), noise_eve_(noise_eve)
{
    check_positive(power, "transmit power");
    check_positive(noise_bob, "Bob noise power");
    check_positive(noise_eve, "Eve noise power");
}

LinkBudget LinkBudget::from_snr(double snr, double noise) { return {snr * noise, noise, noise}; }

SecrecyOutcome secrecy_capacity_closed(const LinkStats& s, const LinkBudget& budget)
{
    if (!(s.gain_bob > 0.0) || !(s.gain_eve > 0.0)) throw DomainError("channel gains must be positive");
    if (!(s.correlation >= 0.0 && s.correlation <= 1.0)) throw DomainError("correlation factor must lie in [0,1]");
    const double gb = budget.snr_bob() * s.gain_bob;
    const double ge = budget.snr_eve() * s.gain_eve;
    const double cross = gb * ge * (1.0 - s.correlation);

    SecrecyOutcome out;
    out.method = Method::closed_form;
    out.alpha = gb - ge + cross;
    out.beta = (1.0 + ge) * cross;
    const double root = std::sqrt(out.alpha * out.alpha + 4.0 * out.beta);
    // alpha + root computed without cancellation when alpha < 0.
    const double num = out.alpha >= 0.0 ? out.alpha + root : (root > 0.0 ? 4.0 * out.beta / (root - out.alpha) : 0.0);
    const double lam = num / (2.0 * (1.0 + ge));
    out.principal_eigenvalue = 1.0 + lam;
    out.capacity = lam > 0.0 ? log2_1p(lam) : 0.0;
    return out;
}

SecrecyOutcome capacity_eigen_oracle(const ChannelVector& h_b, const ChannelVector& h_e, const LinkBudget& budget,
                                     OracleRoute route)
{
    if (h_b.size() != h_e.size()) throw DomainError("capacity oracle: channel vectors have different lengths");
    if (h_b.size() > 10000) throw PreconditionError("capacity oracle is limited to M <= 10^4");
    return route == OracleRoute::span ? oracle_span(h_b, h_e, budget) : oracle_dense(h_b, h_e, budget);
}

CVector mrt_beamformer(CSpan h_b, double power)
{
    check_positive(power, "transmit power");
    const double n = std::sqrt(linalg::norm_squared(h_b));
    if (!(n > 0.0)) throw DomainError("MRT beamformer of a zero channel");
    return linalg::scaled(h_b, std::sqrt(power) / n);
}

CVector asymptotic_beamformer(CSpan h_b, CSpan h_e, double power)
{
    check_positive(power, "transmit power");
    if (h_b.size() != h_e.size()) throw DomainError("asymptotic beamformer: length mismatch");
    const double gb = linalg::norm_squared(h_b), ge = linalg::norm_squared(h_e);
    if (!(gb > 0.0) || !(ge > 0.0)) throw DegenerateInputError("asymptotic beamformer: zero channel");
    const double rho = std::norm(linalg::inner(h_b, h_e)) / (gb * ge);
    if (1.0 - rho <= 1e-12) throw DegenerateInputError("asymptotic beamformer: channels are parallel");

    CVector w(h_b.begin(), h_b.end());
    for (int pass = 0; pass < 2; ++pass) {
        const Complex c = linalg::inner(h_e, w) / ge;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * h_e[i];
    }
    rescale(w, power);
    return w;
}

double achieved_rate(CSpan h_b, CSpan h_e, CSpan w, const LinkBudget& budget)
{
    const double sb = std::norm(linalg::inner(h_b, w)) / budget.noise_bob();
    const double se = std::norm(linalg::inner(h_e, w)) / budget.noise_eve();
    return (std::log1p(sb) - std::log1p(se)) / std::numbers::ln2;
}

Asymptote asymptotic_capacity(ChannelModel model, Regime regime, const geometry::ArrayGeometry& arr,
                              const geometry::NodeGeometry& b, const geometry::NodeGeometry& e,
                              const LinkBudget& budget, const special::QuadratureRule& rule)
{
    const bool co_directional = geometry::same_direction(b, e);
    if (model == ChannelModel::upw && co_directional)
        return {true, std::max(2.0 * std::log2(e.range() / b.range()), 0.0)};
    if (regime == Regime::large_m) {
        if (model == ChannelModel::nusw) {
            const double d = arr.spacing();
            return {true, std::log2(1.0 + budget.snr_bob() * arr.element_area() / (2.0 * d * d))};
        }
        return {false, std::numeric_limits<double>::infinity()};
    }
    const auto s = stats::closed_form_stats(model, arr, b, e, rule);
    return {true, std::log2(budget.snr_bob() * s.gain_bob * (1.0 - s.correlation))};
}

} // namespace nfpls::secrecy
