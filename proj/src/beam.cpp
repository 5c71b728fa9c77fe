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

#include "mrcbeam/beam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mrcbeam
{

const char *to_string(BeamKind kind)
{
    return kind == BeamKind::Mrc ? "mrc" : "single";
}

cplx Decomposition::sum() const
{
    cplx acc(0.0);
    for (const auto &t : terms)
        acc += t.value();
    return acc;
}

std::size_t EffectivenessReport::effective_count() const
{
    std::size_t n = 0;
    for (const auto &c : components)
        n += c.effective ? 1 : 0;
    return n;
}

BeamWeights mrc_weights(const ChannelRealization &channel, const AntennaArray &array)
{
    BeamWeights w{per_antenna_response(channel, array, 0.0), BeamKind::Mrc};
    const double inv_n = 1.0 / static_cast<double>(array.size());
    for (auto &b : w.coefficients)
        b = std::conj(b) * inv_n;
    return w;
}

BeamWeights single_direction_weights(const AntennaArray &array, const Direction &k)
{
    BeamWeights w{steering_vector(array, k), BeamKind::SingleDirection};
    const double inv_n = 1.0 / static_cast<double>(array.size());
    for (auto &b : w.coefficients)
        b = std::conj(b) * inv_n;
    return w;
}

std::size_t strongest_component(const ChannelRealization &channel)
{
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t m = 0; m < channel.size(); ++m)
    {
        const double mag = std::norm(channel[m].alpha);
        if (mag > best_mag)
        {
            best_mag = mag;
            best = m;
        }
    }
    return best;
}

cplx array_factor(const BeamWeights &weights, const AntennaArray &array, const Direction &r)
{
    if (weights.size() != array.size())
        throw std::invalid_argument("array_factor: weight count does not match the array size");
    cplx acc(0.0);
    for (std::size_t n = 0; n < array.size(); ++n)
        acc += weights.coefficients[n] * std::polar(1.0, element_phase(array, n, r));
    return acc;
}

cplx component_array_factor(const AntennaArray &array, const Direction &k_m, const Direction &r)
{
    // phase difference taken before the exponential so F_m(k_m) = 1 exactly
    const Vec3 d = r.vector() - k_m.vector();
    cplx acc(0.0);
    for (const auto &p : array.positions())
        acc += std::polar(1.0, two_pi * p.dot(d));
    return acc / static_cast<double>(array.size());
}

Decomposition decompose(const ChannelRealization &channel, const AntennaArray &array, const Direction &r)
{
    Decomposition d{{}, r};
    d.terms.reserve(channel.size());
    for (std::size_t m = 0; m < channel.size(); ++m)
        d.terms.push_back({m, std::conj(channel[m].alpha), component_array_factor(array, channel[m].direction, r)});
    return d;
}

cplx interference_term(const ChannelRealization &channel, const AntennaArray &array, std::size_t h)
{
    if (h >= channel.size())
        throw std::invalid_argument("interference_term: component index out of range");
    const Direction &probe = channel[h].direction;
    cplx x(0.0);
    for (std::size_t m = 0; m < channel.size(); ++m)
        if (m != h)
            x += std::conj(channel[m].alpha) * component_array_factor(array, channel[m].direction, probe);
    return x;
}

EffectivenessReport classify_effectiveness(const ChannelRealization &channel, const AntennaArray &array)
{
    EffectivenessReport rep;
    rep.components.reserve(channel.size());
    for (std::size_t h = 0; h < channel.size(); ++h)
    {
        const double amp = std::abs(channel[h].alpha);
        const double x = std::abs(interference_term(channel, array, h));
        rep.components.push_back({amp, x, amp >= x});
    }
    return rep;
}

cplx combined_response(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                       double f)
{
    if (weights.size() != array.size())
        throw std::invalid_argument("combined_response: weight count does not match the array size");
    const auto h = per_antenna_response(channel, array, f);
    cplx acc(0.0);
    for (std::size_t n = 0; n < h.size(); ++n)
        acc += weights.coefficients[n] * h[n];
    return acc;
}

double noise_power(const BeamWeights &weights, double sigma0)
{
    if (!(sigma0 >= 0.0))
        throw std::invalid_argument("noise_power: sigma0 must be non-negative");
    double acc = 0.0;
    for (const auto &b : weights.coefficients)
        acc += std::norm(b);
    return sigma0 * sigma0 * acc;
}

std::vector<PatternSample> beam_pattern(const BeamWeights &weights, const AntennaArray &array,
                                        const FieldOfView &plane, double grid_deg, double min_deg, double max_deg)
{
    if (!(grid_deg > 0.0))
        throw std::invalid_argument("beam_pattern: grid step must be positive");
    if (!(max_deg >= min_deg))
        throw std::invalid_argument("beam_pattern: empty angular range");
    const auto steps = static_cast<std::size_t>(std::floor((max_deg - min_deg) / grid_deg + 1e-9));
    std::vector<PatternSample> out;
    out.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
    {
        const double deg = min_deg + static_cast<double>(i) * grid_deg;
        const double gain = std::norm(array_factor(weights, array, plane.at(deg * std::numbers::pi / 180.0)));
        // floor at -300 dB keeps exact nulls finite
        out.push_back({deg, 10.0 * std::log10(std::max(gain, 1e-30))});
    }
    return out;
}

} // namespace mrcbeam
