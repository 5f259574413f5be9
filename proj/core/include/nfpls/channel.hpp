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

#ifndef NFPLS_CHANNEL_HPP
#define NFPLS_CHANNEL_HPP

#include "nfpls/geometry.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nfpls::channel {

using Complex = std::complex<double>;
using geometry::ArrayGeometry;
using geometry::NodeGeometry;
using geometry::Point3;

// Non-uniform spherical wave, uniform spherical wave, uniform planar wave.
enum class ChannelModel { nusw, usw, upw };

inline constexpr ChannelModel kAllModels[] = {ChannelModel::upw, ChannelModel::usw, ChannelModel::nusw};

std::string_view to_string(ChannelModel model) noexcept;
std::optional<ChannelModel> parse_model(std::string_view text) noexcept;

class ChannelVector {
public:
    ChannelVector(ChannelModel model, int m_x, int m_z, std::vector<Complex> entries);

    ChannelModel model() const noexcept { return model_; }
    int m_x() const noexcept { return m_x_; }
    int m_z() const noexcept { return m_z_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Complex> entries() const noexcept { return entries_; }
    const Complex& operator[](std::size_t i) const noexcept { return entries_[i]; }
    double norm_squared() const noexcept;

private:
    ChannelModel model_;
    int m_x_;
    int m_z_;
    std::vector<Complex> entries_;
};

// Entries are ordered by ArrayGeometry::flat_index.
ChannelVector build_channel(ChannelModel model, const ArrayGeometry& arr, const NodeGeometry& node);

// Scalar Green's function power density including the reactive terms:
//   1/(4 pi D^2) * (1 - 1/(k0 D)^2 + 1/(k0 D)^4),  D = |r - s|.
double green_function(const Point3& r, const Point3& s, double wavelength);
// The bracketed factor alone, as a function of the distance.
double green_bracket(double distance, double wavelength);

struct ReactiveComparison {
    double full = 0.0;       // green_function with reactive terms
    double radiating = 0.0;  // 1/(4 pi D^2)
    double relative_difference = 0.0;
};
ReactiveComparison compare_reactive_terms(double distance, double wavelength);

// Power gain of one element: A r Psi / (4 pi r_m^3). Requires r_m > 10 sqrt(A).
double element_gain(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz);

// Debug dump: 16-byte header ("NFCH", u32 version, u32 m_x, u32 m_z), then
// interleaved re/im doubles, all little-endian.
inline constexpr std::uint32_t kBinaryVersion = 1;
void write_binary(std::ostream& out, const ChannelVector& h);
ChannelVector read_binary(std::istream& in, ChannelModel model);

} // namespace nfpls::channel

#endif
