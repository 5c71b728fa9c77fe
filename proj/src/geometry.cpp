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

#include "mrcbeam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mrcbeam
{

double Vec3::norm() const
{
    return std::sqrt(dot(*this));
}

Direction::Direction(const Vec3 &v)
{
    const double n = v.norm();
    if (!std::isfinite(n) || n == 0.0)
        throw std::invalid_argument("Direction: vector must be finite and non-zero");
    v_ = v * (1.0 / n);
}

Direction Direction::from_broadside_angle(double theta)
{
    return Direction(std::sin(theta), std::cos(theta), 0.0);
}

double Direction::angle_to(const Direction &o) const
{
    // atan2 form stays accurate for nearly parallel vectors
    const Vec3 &a = v_, &b = o.v_;
    const Vec3 c{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    return std::atan2(c.norm(), a.dot(b));
}

AntennaArray::AntennaArray(std::vector<Vec3> positions) : positions_(std::move(positions))
{
    if (positions_.empty())
        throw std::invalid_argument("AntennaArray: at least one element is required");
    for (const auto &p : positions_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
            throw std::invalid_argument("AntennaArray: element positions must be finite");
}

const Vec3 &AntennaArray::position(std::size_t n) const
{
    if (n >= positions_.size())
        throw std::invalid_argument("AntennaArray: element index " + std::to_string(n) + " out of range");
    return positions_[n];
}

FieldOfView::FieldOfView(double half_angle, Direction boresight, Direction in_plane)
    : half_angle_(half_angle), boresight_(boresight), in_plane_(in_plane)
{
    if (!(half_angle >= 0.0) || half_angle > std::numbers::pi / 2 + 1e-15)
        throw std::invalid_argument("FieldOfView: half angle must lie in [0, pi/2]");
    const Vec3 &b = boresight_.vector();
    const Vec3 t = in_plane.vector() - b * b.dot(in_plane.vector());
    if (t.norm() < 1e-9)
        throw std::invalid_argument("FieldOfView: in-plane axis is parallel to the boresight");
    in_plane_ = Direction(t);
}

FieldOfView FieldOfView::from_total_degrees(double total_deg)
{
    return FieldOfView(total_deg * std::numbers::pi / 360.0);
}

Direction FieldOfView::at(double theta) const
{
    return Direction(boresight_.vector() * std::cos(theta) + in_plane_.vector() * std::sin(theta));
}

bool FieldOfView::contains(const Direction &d, double tol) const
{
    return d.angle_to(boresight_) <= half_angle_ + tol;
}

AntennaArray make_ula(std::size_t n_elements, double spacing_wavelengths)
{
    if (n_elements == 0)
        throw std::invalid_argument("make_ula: at least one element is required");
    if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths))
        throw std::invalid_argument("make_ula: spacing must be positive");
    std::vector<Vec3> pos(n_elements);
    for (std::size_t i = 0; i < n_elements; ++i)
        pos[i] = {static_cast<double>(i) * spacing_wavelengths, 0.0, 0.0};
    return AntennaArray(std::move(pos));
}

AntennaArray make_upa(std::size_t nx, std::size_t ny, double spacing_wavelengths)
{
    if (nx == 0 || ny == 0)
        throw std::invalid_argument("make_upa: at least one element per axis is required");
    if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths))
        throw std::invalid_argument("make_upa: spacing must be positive");
    std::vector<Vec3> pos;
    pos.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            pos.push_back({static_cast<double>(i) * spacing_wavelengths,
                           static_cast<double>(j) * spacing_wavelengths, 0.0});
    return AntennaArray(std::move(pos));
}

double element_phase(const AntennaArray &array, std::size_t n, const Direction &k)
{
    return two_pi * array.position(n).dot(k.vector());
}

std::vector<cplx> steering_vector(const AntennaArray &array, const Direction &k)
{
    std::vector<cplx> out(array.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = std::polar(1.0, two_pi * array.positions()[n].dot(k.vector()));
    return out;
}

Direction sample_direction(const FieldOfView &fov, Rng &rng)
{
    if (fov.half_angle() == 0.0)
        return fov.boresight();
    std::uniform_real_distribution<double> angle(-fov.half_angle(), fov.half_angle());
    return fov.at(angle(rng));
}

} // namespace mrcbeam
