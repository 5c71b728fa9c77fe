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

// Serial reference path: one trial at a time, composed only from the public
// per-channel operations (weights, per-antenna response, classification).
// Slow, but every step is the textbook definition.

#include "mrcbeam/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mrcbeam::reference
{

ArrayParameterEstimate estimate_array_parameter(const AntennaArray &array, const FieldOfView &fov,
                                                std::size_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw std::invalid_argument("estimate_array_parameter: at least one sample is required");
    const double inv_n = 1.0 / static_cast<double>(array.size());
    double sum = 0.0, sum_sq = 0.0;
    Rng rng;
    for (std::size_t i = 0; i < samples; ++i)
    {
        if (i % array_parameter_chunk == 0)
            rng = trial_rng(seed, i / array_parameter_chunk, StreamKind::ArrayParameter);
        const Direction k1 = sample_direction(fov, rng);
        const Direction km = sample_direction(fov, rng);
        cplx acc(0.0);
        for (std::size_t n = 0; n < array.size(); ++n)
            acc += std::polar(1.0, -element_phase(array, n, km)) * std::polar(1.0, element_phase(array, n, k1));
        const double g = std::norm(acc * inv_n);
        sum += g;
        sum_sq += g * g;
    }
    const double n = static_cast<double>(samples);
    ArrayParameterEstimate est;
    est.samples = samples;
    est.s = sum / n;
    if (samples > 1)
        est.std_error = std::sqrt(std::max(0.0, (sum_sq - n * est.s * est.s) / (n - 1.0)) / n);
    return est;
}

double band_average_gain(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                         double bandwidth, std::size_t freq_points)
{
    if (freq_points == 0)
        throw std::invalid_argument("band_average_gain: at least one frequency point is required");
    if (freq_points == 1)
        return std::norm(combined_response(weights, channel, array, 0.0));
    double acc = 0.0;
    for (std::size_t k = 0; k < freq_points; ++k)
    {
        const double f = -0.5 * bandwidth + bandwidth * static_cast<double>(k) / static_cast<double>(freq_points - 1);
        acc += std::norm(combined_response(weights, channel, array, f));
    }
    return acc / static_cast<double>(freq_points);
}

std::vector<EffectivenessPoint> run_effectiveness_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();
    const AntennaArray array = cfg.array();
    const FieldOfView fov = cfg.fov();
    std::vector<EffectivenessPoint> points;
    for (const std::size_t m_paths : cfg.m_values)
    {
        std::vector<double> frac, count;
        for (std::size_t t = 0; t < cfg.trials; ++t)
        {
            Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t));
            const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
            const auto rep = classify_effectiveness(ch, array);
            const double eff = static_cast<double>(rep.effective_count());
            frac.push_back(1.0 - eff / static_cast<double>(m_paths));
            count.push_back(eff);
        }
        points.push_back({m_paths, cfg.trials, summarize(frac), summarize(count), median(count)});
    }
    return points;
}

std::vector<SnrPoint> run_snr_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();
    const AntennaArray array = cfg.array();
    const FieldOfView fov = cfg.fov();
    std::vector<SnrPoint> points;
    for (const std::size_t m_paths : cfg.m_values)
    {
        std::vector<double> mrc, single;
        for (std::size_t t = 0; t < cfg.trials; ++t)
        {
            Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t));
            const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
            const auto w_mrc = mrc_weights(ch, array);
            const auto w_single = single_direction_weights(array, ch[strongest_component(ch)].direction);
            mrc.push_back(reference::band_average_gain(w_mrc, ch, array, cfg.bandwidth, cfg.freq_points) /
                          noise_power(w_mrc, cfg.sigma0));
            single.push_back(reference::band_average_gain(w_single, ch, array, cfg.bandwidth, cfg.freq_points) /
                             noise_power(w_single, cfg.sigma0));
        }
        points.push_back({m_paths, cfg.trials, summarize(mrc), summarize(single)});
    }
    return points;
}

BlockageSamples run_blockage_experiment(const ExperimentConfig &cfg)
{
    cfg.validate();
    if (cfg.m_values.empty() || cfg.m_values.front() < 2)
        throw std::invalid_argument("blockage experiment requires at least 2 paths");
    const std::size_t m_paths = cfg.m_values.front();
    const AntennaArray array = cfg.array();
    const FieldOfView fov = cfg.fov();
    BlockageSamples res;
    res.m_paths = m_paths;
    for (std::size_t t = 0; t < cfg.trials; ++t)
    {
        Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t), StreamKind::Blockage);
        const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
        const std::size_t blocked = std::uniform_int_distribution<std::size_t>(0, m_paths - 1)(rng);
        const auto w_mrc = mrc_weights(ch, array);
        const auto w_single = single_direction_weights(array, ch[strongest_component(ch)].direction);
        const auto blocked_ch = remove_component(ch, blocked);
        const double mrc =
            reference::band_average_gain(w_mrc, blocked_ch, array, cfg.bandwidth, cfg.freq_points) / noise_power(w_mrc, cfg.sigma0);
        const double single = reference::band_average_gain(w_single, blocked_ch, array, cfg.bandwidth, cfg.freq_points) /
                              noise_power(w_single, cfg.sigma0);
        res.mrc_db.push_back(to_db(std::max(mrc, 1e-30)));
        res.single_db.push_back(to_db(std::max(single, 1e-30)));
    }
    std::sort(res.mrc_db.begin(), res.mrc_db.end());
    std::sort(res.single_db.begin(), res.single_db.end());
    return res;
}

} // namespace mrcbeam::reference
