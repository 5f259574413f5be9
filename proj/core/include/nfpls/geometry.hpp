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

#ifndef NFPLS_GEOMETRY_HPP
#define NFPLS_GEOMETRY_HPP

#include <cstddef>

namespace nfpls::geometry {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double norm(const Point3& p);
Point3 operator-(const Point3& a, const Point3& b);

// Direction cosines of a node: Phi along x, Psi along y (array normal), Omega along z.
struct DirectionCosines {
    double phi_x = 0.0;
    double psi_y = 0.0;
    double omega_z = 0.0;
};

// theta is the azimuth, phi the elevation; both must lie in (0, pi).
DirectionCosines direction_cosines(double theta, double phi);

// Planar array in the x-z plane, centred at the origin. Elements sit at
// s = [m_x d, 0, m_z d] with signed indices m in {-(M-1)/2, ..., (M-1)/2}.
class ArrayGeometry {
public:
    ArrayGeometry(int m_x, int m_z, double spacing, double element_side, double wavelength);

    // d = lambda/2 and A = lambda^2/(4 pi).
    static ArrayGeometry half_wavelength(int m_x, int m_z, double wavelength);

    int m_x() const noexcept { return m_x_; }
    int m_z() const noexcept { return m_z_; }
    int m_total() const noexcept { return m_x_ * m_z_; }
    int half_x() const noexcept { return (m_x_ - 1) / 2; }
    int half_z() const noexcept { return (m_z_ - 1) / 2; }
    bool is_ula() const noexcept { return m_x_ == 1; }

    double spacing() const noexcept { return spacing_; }
    double element_side() const noexcept { return side_; }
    double element_area() const noexcept { return side_ * side_; }
    double wavelength() const noexcept { return wavelength_; }
    double wavenumber() const noexcept;

    // Largest element-centre separation (bounding-box diagonal).
    double aperture() const noexcept;

    bool contains(int ix, int iz) const noexcept;
    // Throws DomainError when (ix, iz) is outside the array.
    void check_index(int ix, int iz) const;
    // Row-major over x then z: ((ix + half_x) * m_z + (iz + half_z)).
    std::size_t flat_index(int ix, int iz) const noexcept;
    Point3 element_position(int ix, int iz) const;

private:
    int m_x_;
    int m_z_;
    double spacing_;
    double side_;
    double wavelength_;
};

class NodeGeometry {
public:
    NodeGeometry(double range, double theta, double phi);

    double range() const noexcept { return range_; }
    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    const DirectionCosines& cosines() const noexcept { return cos_; }
    double epsilon(const ArrayGeometry& arr) const noexcept { return arr.spacing() / range_; }
    Point3 position() const noexcept;

    // Same direction, different range.
    NodeGeometry at_range(double range) const { return {range, theta_, phi_}; }

private:
    double range_;
    double theta_;
    double phi_;
    DirectionCosines cos_;
};

bool same_direction(const NodeGeometry& a, const NodeGeometry& b, double tol = 1e-12) noexcept;

double exact_distance(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz);
double fresnel_distance_approx(const ArrayGeometry& arr, const NodeGeometry& node, int ix, int iz);

struct RegionBoundaries {
    double aperture = 0.0;
    double rayleigh = 0.0;
    double fresnel = 0.0;
};

RegionBoundaries region_boundaries(const ArrayGeometry& arr);

} // namespace nfpls::geometry

#endif
