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

#ifndef NFPLS_STATS_HPP
#define NFPLS_STATS_HPP

#include "nfpls/channel.hpp"
#include "nfpls/geometry.hpp"
#include "nfpls/special_fn.hpp"

namespace nfpls::stats {

using channel::ChannelModel;
using channel::ChannelVector;
using geometry::ArrayGeometry;
using geometry::NodeGeometry;
using special::QuadratureRule;

enum class Provenance { closed_form, direct };

// Uncorrected variants of a few closed forms disagree with the inner-product
// definition. `corrected` is the default everywhere; `literal`
// keeps the uncorrected expressions for side-by-side comparison.
enum class FormVariant { corrected, literal };

struct LinkStats {
    double gain_bob = 0.0;
    double gain_eve = 0.0;
    double correlation = 0.0;
    ChannelModel model = ChannelModel::nusw;
    Provenance provenance = Provenance::closed_form;
};

inline constexpr int kDefaultQuadratureOrder = 100;

// Clamp to [0, 1]; warns when the raw value was off by more than 1e-6.
double clamp_correlation(double raw);

// G = |h|^2 and rho = |h_b^H h_e|^2 / (G_b G_e).
LinkStats rho_direct(const ChannelVector& h_b, const ChannelVector& h_e);

// M A Psi / (4 pi r^2), shared by the UPW and USW models.
double gain_uniform(const ArrayGeometry& arr, const NodeGeometry& node);

// Product of per-axis Dirichlet kernels, delta_x delta_z / (M_x^2 M_z^2).
double rho_upw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e,
               FormVariant variant = FormVariant::corrected);

// Per-axis kernel of the USW correlation for quadratic phase a and linear phase b.
double usw_axis_kernel(double a, double b, int count);
double rho_usw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e);

// Integral approximation of sum_m A r Psi / (4 pi r_m^3). UPA form needs m_x > 1.
double gain_nusw(const ArrayGeometry& arr, const NodeGeometry& node,
                 FormVariant variant = FormVariant::corrected);
double gain_nusw_ula(const ArrayGeometry& arr, const NodeGeometry& node,
                     FormVariant variant = FormVariant::corrected);

// Chebyshev-Gauss evaluation of the correlation integral; order >= 10.
double rho_nusw(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e,
                const QuadratureRule& rule, FormVariant variant = FormVariant::corrected);
double rho_nusw_ula(const ArrayGeometry& arr, const NodeGeometry& b, const NodeGeometry& e,
                    const QuadratureRule& rule, FormVariant variant = FormVariant::corrected);

// Model-dispatched closed forms (ULA forms chosen when m_x == 1).
LinkStats closed_form_stats(ChannelModel model, const ArrayGeometry& arr, const NodeGeometry& b,
                            const NodeGeometry& e, const QuadratureRule& rule,
                            FormVariant variant = FormVariant::corrected);

} // namespace nfpls::stats

#endif
