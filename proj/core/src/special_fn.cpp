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

#include "nfpls/special_fn.hpp"

#include "nfpls/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace nfpls::special {
namespace {

using LComplex = std::complex<long double>;

constexpr long double kTwoOverSqrtPi = 1.128379167095512573896158903121545172L;
constexpr long double kInvSqrtPi = 0.564189583547756286948079451560772586L;

// sum_n (-1)^n z^(2n+1) / (n! (2n+1)), scaled by 2/sqrt(pi).
LComplex erf_series(LComplex z)
{
    const LComplex mz2 = -z * z;
    const long double r2 = std::norm(z);
    LComplex term = z;
    LComplex sum = z;
    for (int n = 1; n < 20000; ++n) {
        term *= mz2 / (long double)n;
        const LComplex add = term / (long double)(2 * n + 1);
        sum += add;
        if (n > r2 && std::abs(add) <= 1e-21L * std::abs(sum)) break;
    }
    return kTwoOverSqrtPi * sum;
}

// Continued fraction for sqrt(pi) e^{z^2} erfc(z), Re z > 0, |z| large:
//   1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))). Modified Lentz.
LComplex erfc_scaled_cf(LComplex z)
{
    constexpr long double tiny = 1e-300L;
    LComplex f = z;
    if (std::abs(f) < tiny) f = tiny;
    LComplex C = f;
    LComplex D = 0.0L;
    for (int n = 1; n < 5000; ++n) {
        const long double a = 0.5L * n;
        D = z + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = z + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0L / D;
        const LComplex delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0L) < 1e-20L) break;
    }
    return 1.0L / f;
}

Complex erf_first_quadrant(Complex zd)
{
    const long double x = zd.real(), y = zd.imag();
    const LComplex z(x, y);
    const long double mag = y * y - x * x;
    const long double ang = -2.0L * x * y;
    if (mag > 11000.0L) {
        // |erf| ~ e^{y^2-x^2}/(|z| sqrt(pi)) is beyond any floating range.
        constexpr double inf = std::numeric_limits<double>::infinity();
        const double dir = double(ang - std::arg(z)) + std::numbers::pi;
        return {std::copysign(inf, std::cos(dir)), std::copysign(inf, std::sin(dir))};
    }
    if (std::abs(z) <= 4.0L || x <= 2.5L) {
        const LComplex v = erf_series(z);
        return {double(v.real()), double(v.imag())};
    }
    // erf = 1 - e^{-z^2} * cf / sqrt(pi)
    const LComplex cf = erfc_scaled_cf(z) * kInvSqrtPi;
    const LComplex e = std::polar(std::exp(mag), ang);
    const LComplex v = 1.0L - e * cf;
    return {double(v.real()), double(v.imag())};
}

} // namespace

Complex erf(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("erf: non-finite argument");
    // Odd symmetry and conjugate reflection reduce to the first quadrant.
    if (z.real() < 0.0) return -erf(-z);
    if (z.imag() < 0.0) return std::conj(erf(std::conj(z)));
    return erf_first_quadrant(z);
}

QuadratureRule::QuadratureRule(int order)
{
    if (order < 1) throw DomainError("quadrature order must be >= 1, got " + std::to_string(order));
    nodes_.resize(std::size_t(order));
    // Evaluate as sin of the complementary angle so that the middle node is an
    // exact zero and the rule is symmetric to the last bit.
    for (int t = 1; t <= order; ++t) {
        const long double a = (long double)(order + 1 - 2 * t) / (2.0L * order);
        nodes_[std::size_t(t - 1)] = double(std::sin(a * std::numbers::pi_v<long double>));
    }
    weight_ = std::numbers::pi / order;
}

QuadratureRule chebyshev_gauss_nodes(int order) { return QuadratureRule(order); }

} // namespace nfpls::special
