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

#include "nfpls/stats.hpp"

#include "nfpls/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

namespace nfpls::stats {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-14;

// |sin(M b/2) / sin(b/2)|^2, with the M^2 limit at b = 0 (mod 2 pi).
double dirichlet_kernel(double b, int count)
{
    const double s = std::sin(0.5 * b);
    if (std::abs(s) < kDegenerate) return double(count) * count;
    const double n = std::sin(0.5 * count * b);
    return (n * n) / (s * s);
}

// Uncorrected Dirichlet form (1 - cos(M Xi)) / (1 - cos Xi).
double dirichlet_cosine_form(double xi, int count)
{
    const double den = 1.0 - std::cos(xi);
    if (std::abs(den) < kDegenerate) return double(count) * count;
    return (1.0 - std::cos(count * xi)) / den;
}

void check_usw_region(const ArrayGeometry& arr, const NodeGeometry& n)
{
    if (n.range() < geometry::region_boundaries(arr).fresnel)
        diag::warn("rho_usw: node inside the Fresnel distance, quadratic-phase model is approximate");
}

} // namespace

double clamp_correlation(double raw)
{
    if (std::isnan(raw)) throw NumericalError("correlation factor evaluated to NaN");
    if (raw >= 0.0 && raw <= 1.0) return raw;
    const double clamped = raw < 0.0 ? 0.0 : 1.0;
    if (std::abs(raw - clamped) > 1e-6) {
        std::ostringstream msg;
        msg << "correlation factor " << raw << " clamped to [0,1]";
        diag::warn(msg.str());
    }
    return clamped;
}

LinkStats rho_direct(const ChannelVector& h_b, const ChannelVector& h_e)
{
    if (h_b.size() != h_e.size()) throw DomainError("rho_direct: channel vectors have different lengths");
    if (h_b.model() != h_e.model()) throw PreconditionError("rho_direct: channel vectors use different models");
    std::complex<long double> ip = 0.0L;
    long double gb = 0.0L, ge = 0.0L;
    for (std::size_t i = 0; i < h_b.size(); ++i) {
        const std::complex<long double> b(h_b[i].real(), h_b[i].imag());
        const std::complex<long double> e(h_e[i].real(), h_e[i].imag());
        ip += std::conj(b) * e;
        gb += std::norm(b);
        ge += std::norm(e);
    }
    if (!(gb > 0.0L) || !(ge > 0.0L)) throw DegenerateInputError("rho_direct: zero channel vector");
    LinkStats out;
    out.gain_bob = double(gb);
    out.gain_eve = double(ge);
    out.correlation = clamp_correlation(double(std::norm(ip) / (gb * ge)));
    out.model = h_b.model();
    out.provenance = Provenance::direct;
    return out;
}

double gain_uniform(const ArrayGeometry& arr, const NodeGeometry& node)
{
    const double r = node.range();
    return arr.m_total() * arr.element_area() * node.cosines().psi_y / (4.0 * kPi * r * r);
}

double rho_upw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e, FormVariant variant)
{
    const double k_d = 2.0 * kPi * arr.spacing() / arr.wavelength();
    const double xi_phi = k_d * (b.cosines().phi_x - e.cosines().phi_x);
    const double xi_omega = k_d * (b.cosines().omega_z - e.cosines().omega_z);
    const int mx = arr.m_x(), mz = arr.m_z();

    if (variant == FormVariant::literal) {
        const double M = double(arr.m_total());
        const bool same_phi = std::abs(xi_phi) < kDegenerate || mx == 1;
        const bool same_omega = std::abs(xi_omega) < kDegenerate;
        if (same_phi && same_omega) return 1.0;
        if (same_omega) return dirichlet_cosine_form(xi_phi, mx) / (M * M);
        if (same_phi) return dirichlet_cosine_form(xi_omega, mz) / (M * M);
        return 4.0 * dirichlet_cosine_form(xi_phi, mx) * dirichlet_cosine_form(xi_omega, mz) / (M * M);
    }

    const double dx = mx == 1 ? 1.0 : dirichlet_kernel(xi_phi, mx) / (double(mx) * mx);
    const double dz = mz == 1 ? 1.0 : dirichlet_kernel(xi_omega, mz) / (double(mz) * mz);
    return clamp_correlation(dx * dz);
}

double usw_axis_kernel(double a, double b, int count)
{
    if (count == 1) return 1.0;
    if (std::abs(a) < kDegenerate) return dirichlet_kernel(b, count);
    const double abs_a = std::abs(a);
    const double root = std::sqrt(abs_a);
    const special::Complex rot = std::polar(1.0, kPi / 4.0);
    if (std::abs(b) < kDegenerate) {
        const double v = std::abs(special::erf(0.5 * count * root * rot));
        return kPi / abs_a * v * v;
    }
    const special::Complex s = special::erf((a * count - b) / (2.0 * root) * rot) +
                               special::erf((a * count + b) / (2.0 * root) * rot);
    return kPi / (4.0 * abs_a) * std::norm(s);
}

double rho_usw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e)
{
    check_usw_region(arr, b);
    check_usw_region(arr, e);
    const auto& cb = b.cosines();
    const auto& ce = e.cosines();
    const double d = arr.spacing(), lam = arr.wavelength();
    const double bx = 2.0 * kPi * d / lam * (cb.phi_x - ce.phi_x);
    const double bz = 2.0 * kPi * d / lam * (cb.omega_z - ce.omega_z);
    const double ax = kPi * d * d / lam *
                      ((1.0 - cb.phi_x * cb.phi_x) / b.range() - (1.0 - ce.phi_x * ce.phi_x) / e.range());
    const double az = kPi * d * d / lam *
                      ((1.0 - cb.omega_z * cb.omega_z) / b.range() - (1.0 - ce.omega_z * ce.omega_z) / e.range());
    const double M = double(arr.m_total());
    return clamp_correlation(usw_axis_kernel(ax, bx, arr.m_x()) * usw_axis_kernel(az, bz, arr.m_z()) / (M * M));
}

double gain_nusw(const ArrayGeometry& arr, const NodeGeometry& node, FormVariant variant)
{
    if (arr.m_x() < 2) throw PreconditionError("gain_nusw: planar form needs m_x > 1, use gain_nusw_ula");
    const auto& c = node.cosines();
    const double eps = node.epsilon(arr);
    const double psi = c.psi_y;
    const double zc = variant == FormVariant::literal ? psi : c.omega_z;
    const double xs[2] = {0.5 * arr.m_x() * eps + c.phi_x, 0.5 * arr.m_x() * eps - c.phi_x};
    const double zs[2] = {0.5 * arr.m_z() * eps + zc, 0.5 * arr.m_z() * eps - zc};
    double sum = 0.0;
    for (double x : xs)
        for (double z : zs) sum += std::atan(x * z / (psi * std::sqrt(psi * psi + x * x + z * z)));
    const double d = arr.spacing();
    return arr.element_area() / (4.0 * kPi * d * d) * sum;
}

double gain_nusw_ula(const ArrayGeometry& arr, const NodeGeometry& node, FormVariant variant)
{
    if (!arr.is_ula()) throw PreconditionError("gain_nusw_ula: array is not a ULA (m_x must be 1)");
    const double M = arr.m_z();
    const double eps = node.epsilon(arr);
    const double d = arr.spacing();
    double c, ratio;
    if (variant == FormVariant::literal) {
        c = std::cos(node.theta());
        ratio = std::sin(node.phi()) / std::sin(node.theta());
    } else {
        // The line integral of (z^2 - 2 Omega z + 1)^{-3/2} brings Psi/(1 - Omega^2).
        c = node.cosines().omega_z;
        ratio = std::sin(node.theta()) / std::sin(node.phi());
    }
    const double me = M * eps;
    const double t1 = (me - 2.0 * c) / std::sqrt(me * me - 4.0 * me * c + 4.0);
    const double t2 = (me + 2.0 * c) / std::sqrt(me * me + 4.0 * me * c + 4.0);
    return arr.element_area() * eps * ratio / (4.0 * kPi * d * d) * (t1 + t2);
}

namespace {

struct NuswKernel {
    double k0, rb, re, tau, phib, omb, phie, ome, exponent;

    std::complex<double> operator()(double x, double z) const
    {
        const double q1 = x * x + z * z - 2.0 * phib * x - 2.0 * omb * z + 1.0;
        const double q2 = tau * tau * (x * x + z * z) - 2.0 * tau * phie * x - 2.0 * tau * ome * z + 1.0;
        // Phase difference k (r_b sqrt(q1) - r_e sqrt(q2)) reduced in extended precision.
        const long double cyc = ((long double)rb * std::sqrt((long double)q1) -
                                 (long double)re * std::sqrt((long double)q2)) * k0 / (2.0L * std::numbers::pi_v<long double>);
        const long double frac = cyc - std::floor(cyc);
        const double ang = double(2.0L * std::numbers::pi_v<long double> * frac);
        const double amp = std::pow(q1, -exponent) * std::pow(q2, -exponent);
        return std::polar(amp, ang);
    }
};

NuswKernel make_kernel(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e, FormVariant v)
{
    return {arr.wavenumber(), b.range(), e.range(), b.range() / e.range(),
            b.cosines().phi_x, b.cosines().omega_z, e.cosines().phi_x, e.cosines().omega_z,
            v == FormVariant::literal ? 1.5 : 0.75};
}

void check_order(const QuadratureRule& rule)
{
    if (rule.order() < 10) throw PreconditionError("rho_nusw: quadrature order must be >= 10");
}

} // namespace

double rho_nusw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e,
                const QuadratureRule& rule, FormVariant variant)
{
    check_order(rule);
    if (arr.m_x() < 2) throw PreconditionError("rho_nusw: planar form needs m_x > 1, use rho_nusw_ula");
    const bool literal = variant == FormVariant::literal;
    const auto g = make_kernel(arr, b, e, variant);
    const double eps_b = b.epsilon(arr);
    // The integration square spans half the aperture on each side of the centre.
    const double scale = literal ? 1.0 : 0.5;
    const double hx = arr.m_x() * eps_b * scale;
    const double hz = arr.m_z() * eps_b * scale;

    const auto nodes = rule.nodes();
    std::vector<double> w(nodes.size());
    for (std::size_t t = 0; t < nodes.size(); ++t) w[t] = std::sqrt(1.0 - nodes[t] * nodes[t]);
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        std::complex<double> row = 0.0;
        for (std::size_t u = 0; u < nodes.size(); ++u) row += w[u] * g(hx * nodes[t], hz * nodes[u]);
        acc += w[t] * row;
    }

    const double Gb = gain_nusw(arr, b, variant);
    const double Ge = gain_nusw(arr, e, variant);
    const double M = arr.m_total();
    const double A = arr.element_area();
    const double T = rule.order();
    const double pref = M * M * A * A * b.cosines().psi_y * e.cosines().psi_y * kPi * kPi /
                        ((literal ? 16.0 : 256.0) * Gb * Ge * b.range() * b.range() * e.range() * e.range() *
                         T * T * T * T);
    const double raw = pref * std::norm(acc);
    return literal ? raw : clamp_correlation(raw);
}

double rho_nusw_ula(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e,
                    const QuadratureRule& rule, FormVariant variant)
{
    check_order(rule);
    if (!arr.is_ula()) throw PreconditionError("rho_nusw_ula: array is not a ULA (m_x must be 1)");
    const bool literal = variant == FormVariant::literal;
    const auto g = make_kernel(arr, b, e, variant);
    const double M = arr.m_z();
    const double hz = M * b.epsilon(arr) * (literal ? 1.0 : 0.5);
    std::complex<double> acc = 0.0;
    for (double z : rule.nodes()) acc += std::sqrt(1.0 - z * z) * g(0.0, hz * z);

    const double Gb = gain_nusw_ula(arr, b, variant);
    const double Ge = gain_nusw_ula(arr, e, variant);
    const double A = arr.element_area();
    const double T = rule.order();
    const double rr = b.range() * b.range() * e.range() * e.range();
    const double psi = b.cosines().psi_y * e.cosines().psi_y;
    const double pref = literal ? M * M * A * A * psi * kPi * kPi / (16.0 * Gb * Ge * rr * T * T * T * T)
                                : A * A * psi * M * M / (64.0 * Gb * Ge * rr * T * T);
    const double raw = pref * std::norm(acc);
    return literal ? raw : clamp_correlation(raw);
}

LinkStats closed_form_stats(ChannelModel model, const ArrayGeometry& arr, const NodeGeometry& b,
                            const NodeGeometry& e, const QuadratureRule& rule, FormVariant variant)
{
    LinkStats s;
    s.model = model;
    s.provenance = Provenance::closed_form;
    switch (model) {
    case ChannelModel::upw:
        s.gain_bob = gain_uniform(arr, b);
        s.gain_eve = gain_uniform(arr, e);
        s.correlation = std::clamp(rho_upw(arr, b, e, variant), 0.0, 1.0);
        break;
    case ChannelModel::usw:
        s.gain_bob = gain_uniform(arr, b);
        s.gain_eve = gain_uniform(arr, e);
        s.correlation = rho_usw(arr, b, e);
        break;
    case ChannelModel::nusw:
        if (arr.is_ula()) {
            s.gain_bob = gain_nusw_ula(arr, b, variant);
            s.gain_eve = gain_nusw_ula(arr, e, variant);
            s.correlation = std::clamp(rho_nusw_ula(arr, b, e, rule, variant), 0.0, 1.0);
        } else {
            s.gain_bob = gain_nusw(arr, b, variant);
            s.gain_eve = gain_nusw(arr, e, variant);
            s.correlation = std::clamp(rho_nusw(arr, b, e, rule, variant), 0.0, 1.0);
        }
        break;
    }
    return s;
}

} // namespace nfpls::stats
