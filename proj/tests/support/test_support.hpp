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

#ifndef NFPLS_TEST_SUPPORT_HPP
#define NFPLS_TEST_SUPPORT_HPP

#include "nfpls/channel.hpp"
#include "nfpls/geometry.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace nfpls::test {

using Complex = std::complex<double>;
using geometry::ArrayGeometry;
using geometry::NodeGeometry;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLambda = 0.125;

inline ArrayGeometry baseline_array(int m_x = 51, int m_z = 51)
{
    return ArrayGeometry::half_wavelength(m_x, m_z, kLambda);
}

inline NodeGeometry baseline_bob() { return {10.0, kPi / 3.0, 2.0 * kPi / 3.0}; }
inline NodeGeometry baseline_eve() { return {20.0, kPi / 3.0, 2.0 * kPi / 3.0}; }

// Element centre from first principles: x = m_x d, z = m_z d, array in the x-z plane.
inline double cartesian_distance(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz)
{
    const double r = node.range();
    const double px = r * std::sin(node.phi()) * std::cos(node.theta());
    const double py = r * std::sin(node.phi()) * std::sin(node.theta());
    const double pz = r * std::cos(node.phi());
    const double dx = px - ix * arr.spacing();
    const double dz = pz - iz * arr.spacing();
    return std::sqrt(dx * dx + py * py + dz * dz);
}

// erf(z) = (2 z / sqrt(pi)) * integral_0^1 exp(-z^2 t^2) dt, adaptive Gauss-Kronrod per component.
inline Complex erf_by_quadrature(Complex z)
{
    using boost::math::quadrature::gauss_kronrod;
    const Complex z2 = z * z;
    const auto part = [&](bool imag) {
        return gauss_kronrod<double, 61>::integrate(
            [&](double t) {
                const Complex v = std::exp(-z2 * t * t);
                return imag ? v.imag() : v.real();
            },
            0.0, 1.0, 12, 1e-14);
    };
    return 2.0 * z / std::sqrt(kPi) * Complex(part(false), part(true));
}

// Random small geometry: odd counts up to max_side, ranges in [r_lo, r_hi], angles away from the plane.
struct RandomPair {
    ArrayGeometry arr;
    NodeGeometry bob;
    NodeGeometry eve;
    channel::ChannelModel model;
    double snr;
    double noise;
};

inline RandomPair random_pair(std::mt19937_64& rng, int max_side = 15, double r_lo = 2.0, double r_hi = 50.0)
{
    std::uniform_int_distribution<int> half(0, (max_side - 1) / 2);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_real_distribution<double> angle(0.2, kPi - 0.2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto arr = ArrayGeometry::half_wavelength(2 * half(rng) + 1, 2 * half(rng) + 1, kLambda);
    const auto range = [&] { return r_lo * std::pow(r_hi / r_lo, unit(rng)); };
    const NodeGeometry b(range(), angle(rng), angle(rng));
    const NodeGeometry e(range(), angle(rng), angle(rng));
    const double snr = std::pow(10.0, -1.0 + 7.0 * unit(rng));  // 1e-1 .. 1e6
    return {arr, b, e, channel::kAllModels[pick(rng)], snr, std::pow(10.0, -2.0 + 2.0 * unit(rng))};
}

inline double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace nfpls::test

#endif
