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

#ifndef MRCBEAM_MONTECARLO_HPP
#define MRCBEAM_MONTECARLO_HPP

#include "mrcbeam/beam.hpp"
#include "mrcbeam/rng.hpp"
#include "mrcbeam/theory.hpp"

#include <cstdint>
#include <vector>

namespace mrcbeam
{

struct ExperimentConfig
{
    std::size_t n_elements = 8;
    double spacing_wavelengths = 0.5;
    double fov_deg = 180.0; // total angle, centered on broadside
    std::vector<std::size_t> m_values{1};
    std::size_t trials = 1000;
    double delay_max = 100e-9; // seconds
    double bandwidth = 1e9;    // Hz
    std::size_t freq_points = 1024;
    double sigma0 = 1.0;
    std::uint64_t seed = 1;
    std::size_t samples = 100000; // array-parameter Monte Carlo
    HarmonicMode harmonic = HarmonicMode::ApproxLogGamma;

    // Worker threads; <= 0 uses the OpenMP default. Never affects results.
    int workers = 0;

    // Throws std::invalid_argument on the first violated constraint.
    void validate() const;

    AntennaArray array() const { return make_ula(n_elements, spacing_wavelengths); }
    FieldOfView fov() const { return FieldOfView::from_total_degrees(fov_deg); }
};

// Stream index of trial t at path count m. Independent of the trial count,
// so extending a run keeps every earlier trial unchanged.
inline std::uint64_t trial_index(std::size_t m_paths, std::size_t trial)
{
    return (static_cast<std::uint64_t>(m_paths) << 32) | static_cast<std::uint64_t>(trial);
}

struct SampleStats
{
    double mean = 0.0;
    double std_error = 0.0;
};

SampleStats summarize(const std::vector<double> &values);
double median(std::vector<double> values);

// Linear-interpolated percentile (p in [0, 100]) of an ascending sample.
double percentile(const std::vector<double> &sorted, double p);

struct EffectivenessPoint
{
    std::size_t m_paths = 0;
    std::size_t trials = 0;
    SampleStats p_ineff;   // fraction of components failing |alpha_h| >= |X_h|
    SampleStats eff_count; // effective components per trial
    double eff_count_median = 0.0;
};

struct SnrPoint
{
    std::size_t m_paths = 0;
    std::size_t trials = 0;
    SampleStats mrc;    // linear SNR
    SampleStats single; // linear SNR

    double mrc_db() const { return to_db(mrc.mean); }
    double single_db() const { return to_db(single.mean); }
};

struct BlockageSamples
{
    std::size_t m_paths = 0;
    // post-blockage SNR in dB, one per trial, sorted ascending
    std::vector<double> mrc_db;
    std::vector<double> single_db;
};

// Mean of |sum_n beta_n H_n(f)|^2 over freq_points uniformly spaced
// frequencies on [-bandwidth/2, +bandwidth/2]. freq_points == 1 evaluates f = 0.
double band_average_gain(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                         double bandwidth, std::size_t freq_points);

std::vector<EffectivenessPoint> run_effectiveness_sweep(const ExperimentConfig &cfg);
std::vector<SnrPoint> run_snr_sweep(const ExperimentConfig &cfg);

// Uses cfg.m_values.front(); requires M >= 2. Beams are designed on the full
// channel and applied, unchanged, to the channel with one path removed.
BlockageSamples run_blockage_experiment(const ExperimentConfig &cfg);

// Serial implementations built directly from the per-channel operations.
// Kept as the correctness reference for the parallel kernels above; they
// consume the same random streams, so results agree to rounding.
namespace reference
{

ArrayParameterEstimate estimate_array_parameter(const AntennaArray &array, const FieldOfView &fov,
                                                std::size_t samples, std::uint64_t seed);
double band_average_gain(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                         double bandwidth, std::size_t freq_points);
std::vector<EffectivenessPoint> run_effectiveness_sweep(const ExperimentConfig &cfg);
std::vector<SnrPoint> run_snr_sweep(const ExperimentConfig &cfg);
BlockageSamples run_blockage_experiment(const ExperimentConfig &cfg);

} // namespace reference

} // namespace mrcbeam

#endif
