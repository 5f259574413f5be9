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

#include "nfpls/geometry.hpp"

#include "nfpls/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nfpls::geometry {

double norm(const Point3& p) { return std::hypot(p.x, p.y, p.z); }

Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

DirectionCosines direction_cosines(double theta, double phi)
{
    constexpr double pi = std::numbers::pi;
    if (!(theta > 0.0 && theta < pi)) throw DomainError("azimuth theta must lie in (0, pi), got " + std::to_string(theta));
    if (!(phi > 0.0 && phi < pi)) throw DomainError("elevation phi must lie in (0, pi), got " + std::to_string(phi));
    const double sp = std::sin(phi);
    return {sp * std::cos(theta), sp * std::sin(theta), std::cos(phi)};
}

ArrayGeometry::ArrayGeometry(int m_x, int m_z, double spacing, double element_side, double wavelength)
    : m_x_(m_x), m_z_(m_z), spacing_(spacing), side_(element_side), wavelength_(wavelength)
{
    if (m_x < 1 || m_x % 2 == 0) throw DomainError("m_x must be a positive odd count, got " + std::to_string(m_x));
    if (m_z < 1 || m_z % 2 == 0) throw DomainError("m_z must be a positive odd count, got " + std::to_string(m_z));
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) throw DomainError("wavelength must be positive");
    if (!(element_side > 0.0) || !std::isfinite(element_side)) throw DomainError("element side must be positive");
    if (!(spacing >= element_side) || !std::isfinite(spacing))
        throw DomainError("spacing must be at least the element side (d >= sqrt(A))");
}

ArrayGeometry ArrayGeometry::half_wavelength(int m_x, int m_z, double wavelength)
{
    const double side = wavelength / (2.0 * std::sqrt(std::numbers::pi));
    return {m_x, m_z, wavelength / 2.0, side, wavelength};
}

double ArrayGeometry::wavenumber() const noexcept { return 2.0 * std::numbers::pi / wavelength_; }

double ArrayGeometry::aperture() const noexcept
{
    return std::hypot(double(m_x_ - 1), double(m_z_ - 1)) * spacing_;
}

bool ArrayGeometry::contains(int ix, int iz) const noexcept
{
    return ix >= -half_x() && ix <= half_x() && iz >= -half_z() && iz <= half_z();
}

void ArrayGeometry::check_index(int ix, int iz) const
{
    if (!contains(ix, iz))
        throw DomainError("element index (" + std::to_string(ix) + ", " + std::to_string(iz) +
                          ") outside a " + std::to_string(m_x_) + "x" + std::to_string(m_z_) + " array");
}

std::size_t ArrayGeometry::flat_index(int ix, int iz) const noexcept
{
    return std::size_t(ix + half_x()) * std::size_t(m_z_) + std::size_t(iz + half_z());
}

Point3 ArrayGeometry::element_position(int ix, int iz) const
{
    check_index(ix, iz);
    return {ix * spacing_, 0.0, iz * spacing_};
}

NodeGeometry::NodeGeometry(double range, double theta, double phi)
    : range_(range), theta_(theta), phi_(phi), cos_(direction_cosines(theta, phi))
{
    if (!(range > 0.0) || !std::isfinite(range)) throw DomainError("node range must be positive and finite");
}

Point3 NodeGeometry::position() const noexcept
{
    return {range_ * cos_.phi_x, range_ * cos_.psi_y, range_ * cos_.omega_z};
}

bool same_direction(const NodeGeometry& a, const NodeGeometry& b, double tol) noexcept
{
    return std::abs(a.theta() - b.theta()) <= tol && std::abs(a.phi() - b.phi()) <= tol;
}

double exact_distance(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz)
{
    arr.check_index(ix, iz);
    const long double eps = (long double)arr.spacing() / node.range();
    const long double mx = ix, mz = iz;
    const auto& c = node.cosines();
    const long double q = 1.0L - 2.0L * mx * eps * c.phi_x - 2.0L * mz * eps * c.omega_z +
                          (mx * mx + mz * mz) * eps * eps;
    return double(node.range() * std::sqrt(q));
}

double fresnel_distance_approx(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz)
{
    arr.check_index(ix, iz);
    const long double eps = (long double)arr.spacing() / node.range();
    const long double mx = ix, mz = iz;
    const auto& c = node.cosines();
    const long double lin = eps * (mx * c.phi_x + mz * c.omega_z);
    const long double quad = 0.5L * eps * eps *
                             (mx * mx * (1.0L - (long double)c.phi_x * c.phi_x) +
                              mz * mz * (1.0L - (long double)c.omega_z * c.omega_z));
    return double(node.range() * (1.0L - lin + quad));
}

RegionBoundaries region_boundaries(const ArrayGeometry& arr)
{
    const double D = arr.aperture();
    const double lam = arr.wavelength();
    return {D, 2.0 * D * D / lam, 0.5 * std::sqrt(D * D * D / lam)};
}

} // namespace nfpls::geometry
