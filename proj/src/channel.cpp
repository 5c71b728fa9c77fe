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

#include "mrcbeam/channel.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace mrcbeam
{

ChannelRealization::ChannelRealization(std::vector<MultipathComponent> components)
    : components_(std::move(components))
{
    if (components_.empty())
        throw std::invalid_argument("ChannelRealization: at least one component is required");
    for (const auto &c : components_)
        if (!(c.delay >= 0.0) || !std::isfinite(c.delay) || !std::isfinite(c.alpha.real()) ||
            !std::isfinite(c.alpha.imag()))
            throw std::invalid_argument("ChannelRealization: amplitudes must be finite and delays >= 0");
}

ChannelRealization sample_channel(std::size_t m_paths, const FieldOfView &fov, double delay_max, Rng &rng)
{
    if (m_paths == 0)
        throw std::invalid_argument("sample_channel: at least one path is required");
    if (!(delay_max > 0.0))
        throw std::invalid_argument("sample_channel: delay_max must be positive");

    // unit total variance: each quadrature carries 1/2
    std::normal_distribution<double> quad(0.0, std::sqrt(0.5));
    std::uniform_real_distribution<double> delay(0.0, delay_max);

    std::vector<MultipathComponent> comps;
    comps.reserve(m_paths);
    for (std::size_t m = 0; m < m_paths; ++m)
    {
        const double re = quad(rng);
        const double im = quad(rng);
        const Direction k = sample_direction(fov, rng);
        comps.push_back({cplx(re, im), k, delay(rng)});
    }
    return ChannelRealization(std::move(comps));
}

std::vector<cplx> per_antenna_response(const ChannelRealization &channel, const AntennaArray &array, double f)
{
    std::vector<cplx> h(array.size(), cplx(0.0));
    for (const auto &c : channel.components())
    {
        const cplx g = c.alpha * std::polar(1.0, -two_pi * f * c.delay);
        for (std::size_t n = 0; n < h.size(); ++n)
            h[n] += g * std::polar(1.0, two_pi * array.positions()[n].dot(c.direction.vector()));
    }
    return h;
}

ChannelRealization remove_component(const ChannelRealization &channel, std::size_t index)
{
    if (index >= channel.size())
        throw std::invalid_argument("remove_component: index out of range");
    if (channel.size() == 1)
        throw std::invalid_argument("remove_component: cannot remove the only component");
    std::vector<MultipathComponent> comps(channel.components().begin(), channel.components().end());
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(index));
    return ChannelRealization(std::move(comps));
}

ChannelRealization insert_component(const ChannelRealization &channel, std::size_t index,
                                    const MultipathComponent &component)
{
    if (index > channel.size())
        throw std::invalid_argument("insert_component: index out of range");
    std::vector<MultipathComponent> comps(channel.components().begin(), channel.components().end());
    comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(index), component);
    return ChannelRealization(std::move(comps));
}

ChannelRealization example_channel(double alpha4)
{
    const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
    return ChannelRealization({
        {cplx(0.5), Direction(-1.0, 0.0, 0.0), 0.0},
        {cplx(1.0), Direction(r3, -r3, -r3), 0.0},
        {cplx(1.5), Direction(-r2, 0.0, r2), 0.0},
        {cplx(alpha4), Direction(-r3, -std::sqrt(2.0 / 3.0), 0.0), 0.0},
    });
}

nlohmann::json channel_to_json(const ChannelRealization &channel)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto &c : channel.components())
        comps.push_back({{"re", c.alpha.real()},
                         {"im", c.alpha.imag()},
                         {"kx", c.direction.x()},
                         {"ky", c.direction.y()},
                         {"kz", c.direction.z()},
                         {"delay_ns", c.delay * 1e9}});
    return {{"components", std::move(comps)}};
}

ChannelRealization channel_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
        throw std::invalid_argument("channel JSON: expected an object with a \"components\" array");
    std::vector<MultipathComponent> comps;
    for (const auto &c : j.at("components"))
    {
        try
        {
            comps.push_back({cplx(c.at("re").get<double>(), c.at("im").get<double>()),
                             Direction(c.at("kx").get<double>(), c.at("ky").get<double>(), c.at("kz").get<double>()),
                             c.at("delay_ns").get<double>() * 1e-9});
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument(std::string("channel JSON: ") + e.what());
        }
    }
    return ChannelRealization(std::move(comps));
}

} // namespace mrcbeam
