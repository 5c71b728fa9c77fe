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

#ifndef MRCBEAM_BEAM_HPP
#define MRCBEAM_BEAM_HPP

#include "mrcbeam/channel.hpp"

#include <vector>

namespace mrcbeam
{

enum class BeamKind
{
    Mrc,
    SingleDirection,
};

const char *to_string(BeamKind kind);

// Analog beamforming coefficients, one per element. Not normalized: every
// SNR divides by noise_power(), so any complex scale cancels.
struct BeamWeights
{
    std::vector<cplx> coefficients;
    BeamKind kind = BeamKind::Mrc;

    std::size_t size() const { return coefficients.size(); }
};

// One term alpha_m^* F_m(r) of the per-path expansion of the MRC array factor.
struct DecompositionTerm
{
    std::size_t index;
    cplx weight;  // alpha_m^*
    cplx pattern; // F_m(r)

    cplx value() const { return weight * pattern; }
};

struct Decomposition
{
    std::vector<DecompositionTerm> terms;
    Direction probe;

    cplx sum() const;
};

struct ComponentEffectiveness
{
    double amplitude;    // |alpha_h|
    double interference; // |X_h|
    bool effective;      // amplitude >= interference
};

struct EffectivenessReport
{
    std::vector<ComponentEffectiveness> components;

    std::size_t effective_count() const;
    std::size_t ineffective_count() const { return components.size() - effective_count(); }
};

// beta_n = conj(H_n(0)) / N
BeamWeights mrc_weights(const ChannelRealization &channel, const AntennaArray &array);

// beta_n = e^{-j phi_{n,k}} / N
BeamWeights single_direction_weights(const AntennaArray &array, const Direction &k);

// argmax |alpha_m|, lowest index on ties.
std::size_t strongest_component(const ChannelRealization &channel);

// F(r) = sum_n beta_n e^{j phi_{n,r}}
cplx array_factor(const BeamWeights &weights, const AntennaArray &array, const Direction &r);

// F_m(r) = (1/N) sum_n e^{-j phi_{n,k_m}} e^{j phi_{n,r}}; equals 1 at r = k_m.
cplx component_array_factor(const AntennaArray &array, const Direction &k_m, const Direction &r);

Decomposition decompose(const ChannelRealization &channel, const AntennaArray &array, const Direction &r);

// X_h = sum_{m != h} alpha_m^* F_m(k_h), so that F(k_h) = alpha_h^* + X_h.
cplx interference_term(const ChannelRealization &channel, const AntennaArray &array, std::size_t h);

// Component h is effective iff |alpha_h| >= |X_h| (equality counts as effective).
EffectivenessReport classify_effectiveness(const ChannelRealization &channel, const AntennaArray &array);

// sum_n beta_n H_n(f)
cplx combined_response(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                       double f);

// sigma0^2 * sum_n |beta_n|^2
double noise_power(const BeamWeights &weights, double sigma0);

// |F(r(theta))|^2 in dB for theta on a uniform grid across the FOV sweep plane.
struct PatternSample
{
    double theta_deg;
    double gain_db;
};

std::vector<PatternSample> beam_pattern(const BeamWeights &weights, const AntennaArray &array,
                                        const FieldOfView &plane, double grid_deg, double min_deg = -90.0,
                                        double max_deg = 90.0);

} // namespace mrcbeam

#endif
