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

#ifndef NFPLS_SPECIAL_FN_HPP
#define NFPLS_SPECIAL_FN_HPP

#include <complex>
#include <span>
#include <vector>

namespace nfpls::special {

using Complex = std::complex<double>;

// Error function of a complex argument. Maclaurin series (long double) near the
// origin and close to the imaginary axis, continued fraction for erfc elsewhere.
// Results whose magnitude exceeds the double range saturate to infinity.
Complex erf(Complex z);

// Chebyshev-Gauss rule of the first kind:
//   int_{-1}^{1} f(x)/sqrt(1-x^2) dx ~ (pi/T) sum_t f(zeta_t),
//   zeta_t = cos((2t-1) pi/(2T)), t = 1..T.
class QuadratureRule {
public:
    explicit QuadratureRule(int order);

    int order() const noexcept { return int(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double weight() const noexcept { return weight_; }

    template <class F>
    auto integrate(F&& f) const
    {
        decltype(f(0.0)) acc{};
        for (double z : nodes_) acc += f(z);
        return acc * weight_;
    }

private:
    std::vector<double> nodes_;
    double weight_;
};

QuadratureRule chebyshev_gauss_nodes(int order);

} // namespace nfpls::special

#endif
