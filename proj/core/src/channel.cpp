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

#include "nfpls/channel.hpp"

#include "nfpls/error.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

namespace nfpls::channel {
namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// exp(-j 2 pi u) with u reduced modulo 1 in extended precision.
Complex unit_phasor(long double cycles)
{
    const long double frac = cycles - std::floor(cycles);
    const long double a = kTwoPiL * frac;
    return {double(std::cos(a)), double(-std::sin(a))};
}

void put_u32(std::ostream& out, std::uint32_t v)
{
    std::array<char, 4> b{};
    for (int i = 0; i < 4; ++i) b[std::size_t(i)] = char((v >> (8 * i)) & 0xffu);
    out.write(b.data(), 4);
}

void put_f64(std::ostream& out, double v)
{
    const auto bits = std::bit_cast<std::uint64_t>(v);
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i) b[std::size_t(i)] = char((bits >> (8 * i)) & 0xffu);
    out.write(b.data(), 8);
}

std::uint64_t get_le(std::istream& in, int bytes)
{
    std::array<unsigned char, 8> b{};
    in.read(reinterpret_cast<char*>(b.data()), bytes);
    if (!in) throw DomainError("channel dump truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t(b[std::size_t(i)]) << (8 * i);
    return v;
}

} // namespace

std::string_view to_string(ChannelModel model) noexcept
{
    switch (model) {
    case ChannelModel::nusw: return "nusw";
    case ChannelModel::usw: return "usw";
    case ChannelModel::upw: return "upw";
    }
    return "unknown";
}

std::optional<ChannelModel> parse_model(std::string_view text) noexcept
{
    if (text == "nusw" || text == "NUSW") return ChannelModel::nusw;
    if (text == "usw" || text == "USW") return ChannelModel::usw;
    if (text == "upw" || text == "UPW") return ChannelModel::upw;
    return std::nullopt;
}

ChannelVector::ChannelVector(ChannelModel model, int m_x, int m_z, std::vector<Complex> entries)
    : model_(model), m_x_(m_x), m_z_(m_z), entries_(std::move(entries))
{
    if (m_x < 1 || m_z < 1 || entries_.size() != std::size_t(m_x) * std::size_t(m_z))
        throw DomainError("channel vector length does not match the array size");
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw DomainError("channel vector has a non-finite entry");
}

double ChannelVector::norm_squared() const noexcept
{
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return s;
}

ChannelVector build_channel(ChannelModel model, const ArrayGeometry& arr, const NodeGeometry& node)
{
    const auto& c = node.cosines();
    const double r = node.range();
    const double A = arr.element_area();
    const long double lam = arr.wavelength();
    const long double d = arr.spacing();
    const double uniform_amp = std::sqrt(A * c.psi_y / (4.0 * std::numbers::pi * r * r));

    std::vector<Complex> h(std::size_t(arr.m_total()));
    for (int ix = -arr.half_x(); ix <= arr.half_x(); ++ix) {
        for (int iz = -arr.half_z(); iz <= arr.half_z(); ++iz) {
            Complex v;
            switch (model) {
            case ChannelModel::nusw: {
                const double rm = geometry::exact_distance(arr, node, ix, iz);
                const double amp = std::sqrt(A * r * c.psi_y / (4.0 * std::numbers::pi * rm * rm * rm));
                v = amp * unit_phasor((long double)rm / lam);
                break;
            }
            case ChannelModel::usw: {
                const double rt = geometry::fresnel_distance_approx(arr, node, ix, iz);
                v = uniform_amp * unit_phasor((long double)rt / lam);
                break;
            }
            case ChannelModel::upw: {
                const long double cycles =
                    (long double)r / lam - (ix * d * (long double)c.phi_x + iz * d * (long double)c.omega_z) / lam;
                v = uniform_amp * unit_phasor(cycles);
                break;
            }
            }
            h[arr.flat_index(ix, iz)] = v;
        }
    }
    return {model, arr.m_x(), arr.m_z(), std::move(h)};
}

double green_bracket(double distance, double wavelength)
{
    if (!(distance > 0.0)) throw DomainError("Green's function undefined at zero distance");
    const double kd = 2.0 * std::numbers::pi / wavelength * distance;
    const double inv2 = 1.0 / (kd * kd);
    return 1.0 - inv2 + inv2 * inv2;
}

double green_function(const Point3& r, const Point3& s, double wavelength)
{
    const double D = geometry::norm(r - s);
    if (!(D > 0.0)) throw DomainError("Green's function undefined for coincident points");
    return green_bracket(D, wavelength) / (4.0 * std::numbers::pi * D * D);
}

ReactiveComparison compare_reactive_terms(double distance, double wavelength)
{
    ReactiveComparison out;
    out.radiating = 1.0 / (4.0 * std::numbers::pi * distance * distance);
    out.full = out.radiating * green_bracket(distance, wavelength);
    out.relative_difference = std::abs(out.full - out.radiating) / out.radiating;
    return out;
}

double element_gain(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz)
{
    const double rm = geometry::exact_distance(arr, node, ix, iz);
    if (!(rm > 10.0 * arr.element_side()))
        throw PreconditionError("element_gain needs the node farther than 10 sqrt(A) from the element");
    return arr.element_area() * node.range() * node.cosines().psi_y / (4.0 * std::numbers::pi * rm * rm * rm);
}

void write_binary(std::ostream& out, const ChannelVector& h)
{
    out.write("NFCH", 4);
    put_u32(out, kBinaryVersion);
    put_u32(out, std::uint32_t(h.m_x()));
    put_u32(out, std::uint32_t(h.m_z()));
    for (const auto& e : h.entries()) {
        put_f64(out, e.real());
        put_f64(out, e.imag());
    }
}

ChannelVector read_binary(std::istream& in, ChannelModel model)
{
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::string_view(magic.data(), 4) != "NFCH") throw DomainError("not a channel dump (bad magic)");
    const auto version = std::uint32_t(get_le(in, 4));
    if (version != kBinaryVersion) throw DomainError("unsupported channel dump version " + std::to_string(version));
    const auto mx = std::uint32_t(get_le(in, 4));
    const auto mz = std::uint32_t(get_le(in, 4));
    if (mx == 0 || mz == 0 || std::uint64_t(mx) * mz > (1u << 26)) throw DomainError("implausible array size in dump");
    std::vector<Complex> e(std::size_t(mx) * mz);
    for (auto& v : e) {
        const double re = std::bit_cast<double>(get_le(in, 8));
        const double im = std::bit_cast<double>(get_le(in, 8));
        v = {re, im};
    }
    return {model, int(mx), int(mz), std::move(e)};
}

} // namespace nfpls::channel
