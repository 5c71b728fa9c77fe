// SPDX-License-Identifier: Apache-2.0
//
// mrcbeam: beam geometry and wideband SNR of maximal-ratio-combining arrays
// Copyright (C) 2026 The mrcbeam authors
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

#ifndef MRCBEAM_GEOMETRY_HPP
#define MRCBEAM_GEOMETRY_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace mrcbeam
{

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Vec3
{
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr bool operator==(const Vec3 &) const = default;
};

// Unit propagation (or probe) direction. The norm is checked on construction
// and the stored vector is renormalized so |v| = 1 to machine precision.
class Direction
{
  public:
    // Throws std::invalid_argument for a zero or non-finite vector.
    explicit Direction(const Vec3 &v);
    Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}

    // Direction in the xy-plane at angle theta from +y (broadside of an
    // x-axis ULA), positive towards +x: (sin theta, cos theta, 0).
    static Direction from_broadside_angle(double theta);

    const Vec3 &vector() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    // Angle in radians between this direction and another.
    double angle_to(const Direction &o) const;

  private:
    Vec3 v_;
};

// Element positions in units of the carrier wavelength.
class AntennaArray
{
  public:
    explicit AntennaArray(std::vector<Vec3> positions);

    std::size_t size() const { return positions_.size(); }
    const Vec3 &position(std::size_t n) const;
    std::span<const Vec3> positions() const { return positions_; }

  private:
    std::vector<Vec3> positions_;
};

// Angular sector around a boresight. Directions are drawn in the plane
// spanned by the boresight and the in-plane axis, with the angle from
// boresight uniform on [-half_angle, +half_angle].
class FieldOfView
{
  public:
    // Defaults to the broadside half-plane of an x-axis ULA (boresight +y,
    // sweeping towards +x). The in-plane axis is orthogonalized against the
    // boresight. 0 <= half_angle <= pi/2.
    explicit FieldOfView(double half_angle,
                         Direction boresight = Direction(0.0, 1.0, 0.0),
                         Direction in_plane = Direction(1.0, 0.0, 0.0));

    static FieldOfView from_total_degrees(double total_deg);

    double half_angle() const { return half_angle_; }
    const Direction &boresight() const { return boresight_; }
    const Direction &in_plane() const { return in_plane_; }

    // Direction at signed angle theta from boresight inside the sweep plane.
    Direction at(double theta) const;
    bool contains(const Direction &d, double tol = 1e-12) const;

  private:
    double half_angle_;
    Direction boresight_;
    Direction in_plane_;
};

AntennaArray make_ula(std::size_t n_elements, double spacing_wavelengths = 0.5);

// Rectangular nx-by-ny grid in the xy-plane, first element at the origin.
AntennaArray make_upa(std::size_t nx, std::size_t ny, double spacing_wavelengths = 0.5);

// phi = 2 pi (A_n . k) with A_n in wavelengths.
double element_phase(const AntennaArray &array, std::size_t n, const Direction &k);

std::vector<cplx> steering_vector(const AntennaArray &array, const Direction &k);

Direction sample_direction(const FieldOfView &fov, Rng &rng);

} // namespace mrcbeam

#endif
