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

#ifndef MRCBEAM_CHANNEL_HPP
#define MRCBEAM_CHANNEL_HPP

#include "mrcbeam/geometry.hpp"

#include <nlohmann/json_fwd.hpp>

#include <vector>

namespace mrcbeam
{

// One plane wave: complex amplitude, arrival direction, delay in seconds.
struct MultipathComponent
{
    cplx alpha;
    Direction direction;
    double delay = 0.0;
};

// Ordered list of M >= 1 plane waves. Index m is stable and meaningful.
class ChannelRealization
{
  public:
    explicit ChannelRealization(std::vector<MultipathComponent> components);

    std::size_t size() const { return components_.size(); }
    const MultipathComponent &operator[](std::size_t m) const { return components_[m]; }
    std::span<const MultipathComponent> components() const { return components_; }

  private:
    std::vector<MultipathComponent> components_;
};

// alpha ~ CN(0, 1), directions uniform in the FOV angle, delays uniform on
// [0, delay_max]. Draw order per path: alpha (re, im), direction, delay.
ChannelRealization sample_channel(std::size_t m_paths, const FieldOfView &fov, double delay_max, Rng &rng);

// H_n(f) = sum_m alpha_m e^{j phi_{n,k_m}} e^{-j 2 pi f tau_m}, f relative to band center.
std::vector<cplx> per_antenna_response(const ChannelRealization &channel, const AntennaArray &array, double f);

// Throws std::invalid_argument if index is out of range or M == 1.
ChannelRealization remove_component(const ChannelRealization &channel, std::size_t index);

// Inverse of remove_component: component ends up at position index.
ChannelRealization insert_component(const ChannelRealization &channel, std::size_t index,
                                    const MultipathComponent &component);

// The four-path example channel with a free fourth amplitude, zero delays.
ChannelRealization example_channel(double alpha4);

// {"components":[{"re","im","kx","ky","kz","delay_ns"}]}
nlohmann::json channel_to_json(const ChannelRealization &channel);
ChannelRealization channel_from_json(const nlohmann::json &j);

} // namespace mrcbeam

#endif
