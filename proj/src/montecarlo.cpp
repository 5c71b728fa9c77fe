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

// OpenMP trial kernels. Every (M, trial) work item owns its random stream and
// writes into its own output slot; reductions run serially in trial order
// afterwards, so the output is bit-identical for any number of workers.

#include "mrcbeam/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace mrcbeam
{

void ExperimentConfig::validate() const
{
    if (n_elements == 0)
        throw std::invalid_argument("elements must be at least 1");
    if (!(spacing_wavelengths > 0.0))
        throw std::invalid_argument("spacing must be positive");
    if (!(fov_deg >= 0.0 && fov_deg <= 180.0))
        throw std::invalid_argument("fov must lie in [0, 180] degrees");
    for (const auto m : m_values)
        if (m == 0 || m > 0xffffffffu)
            throw std::invalid_argument("path counts must lie in [1, 2^32)");
    if (trials == 0 || trials > 0xffffffffu)
        throw std::invalid_argument("trials must lie in [1, 2^32)");
    if (!(delay_max > 0.0))
        throw std::invalid_argument("delay_max must be positive");
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    if (freq_points < 2)
        throw std::invalid_argument("freq_points must be at least 2");
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("sigma0 must be positive");
    if (samples == 0)
        throw std::invalid_argument("samples must be at least 1");
}

SampleStats summarize(const std::vector<double> &values)
{
    SampleStats st;
    if (values.empty())
        return st;
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (const double v : values)
        sum += v;
    st.mean = sum / n;
    if (values.size() > 1)
    {
        double ss = 0.0;
        for (const double v : values)
            ss += (v - st.mean) * (v - st.mean);
        st.std_error = std::sqrt(ss / (n - 1.0) / n);
    }
    return st;
}

double median(std::vector<double> values)
{
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double percentile(const std::vector<double> &sorted, double p)
{
    if (sorted.empty())
        throw std::invalid_argument("percentile: empty sample");
    if (!(p >= 0.0 && p <= 100.0))
        throw std::invalid_argument("percentile: p must lie in [0, 100]");
    const double pos = p / 100.0 * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

namespace
{

int resolve_workers(int workers)
{
    return workers > 0 ? workers : omp_get_max_threads();
}

// Steering matrix S[m*N + n] = e^{j phi_{n,k_m}}.
std::vector<cplx> steering_matrix(const ChannelRealization &ch, const AntennaArray &array)
{
    const std::size_t n_el = array.size();
    std::vector<cplx> s(ch.size() * n_el);
    for (std::size_t m = 0; m < ch.size(); ++m)
    {
        const Vec3 &k = ch[m].direction.vector();
        for (std::size_t n = 0; n < n_el; ++n)
            s[m * n_el + n] = std::polar(1.0, two_pi * array.positions()[n].dot(k));
    }
    return s;
}

// Per-path gain through the beam: g_m = alpha_m sum_n beta_n S[m, n], so that
// the combined response is sum_m g_m e^{-j 2 pi f tau_m}.
std::vector<cplx> path_gains(const std::vector<cplx> &beta, const ChannelRealization &ch,
                             const std::vector<cplx> &steer)
{
    const std::size_t n_el = beta.size();
    std::vector<cplx> g(ch.size());
    for (std::size_t m = 0; m < ch.size(); ++m)
    {
        cplx acc(0.0);
        for (std::size_t n = 0; n < n_el; ++n)
            acc += beta[n] * steer[m * n_el + n];
        g[m] = ch[m].alpha * acc;
    }
    return g;
}

// Mean |sum_m g_m e^{-j 2 pi f_k tau_m}|^2 over the frequency grid. Delay
// phasors advance by complex rotation and are re-anchored periodically.
double band_average_from_gains(const std::vector<cplx> &g, const ChannelRealization &ch, double bandwidth,
                               std::size_t freq_points, std::vector<cplx> &scratch)
{
    constexpr std::size_t reanchor = 128;
    if (freq_points <= 1)
    {
        cplx y(0.0);
        for (const auto &gm : g)
            y += gm;
        return std::norm(y);
    }
    const double f0 = -0.5 * bandwidth;
    const double df = bandwidth / static_cast<double>(freq_points - 1);
    scratch.assign(freq_points, cplx(0.0));
    for (std::size_t m = 0; m < g.size(); ++m)
    {
        if (g[m] == cplx(0.0))
            continue;
        const double tau = ch[m].delay;
        const cplx step = std::polar(1.0, -two_pi * df * tau);
        cplx z;
        for (std::size_t k = 0; k < freq_points; ++k)
        {
            if (k % reanchor == 0)
                z = g[m] * std::polar(1.0, -two_pi * (f0 + static_cast<double>(k) * df) * tau);
            scratch[k] += z;
            z *= step;
        }
    }
    double acc = 0.0;
    for (const auto &y : scratch)
        acc += std::norm(y);
    return acc / static_cast<double>(freq_points);
}

std::vector<cplx> mrc_from_steering(const ChannelRealization &ch, const std::vector<cplx> &steer, std::size_t n_el)
{
    std::vector<cplx> beta(n_el, cplx(0.0));
    for (std::size_t m = 0; m < ch.size(); ++m)
        for (std::size_t n = 0; n < n_el; ++n)
            beta[n] += ch[m].alpha * steer[m * n_el + n];
    const double inv_n = 1.0 / static_cast<double>(n_el);
    for (auto &b : beta)
        b = std::conj(b) * inv_n;
    return beta;
}

std::vector<cplx> single_from_steering(std::size_t target, const std::vector<cplx> &steer, std::size_t n_el)
{
    std::vector<cplx> beta(n_el);
    const double inv_n = 1.0 / static_cast<double>(n_el);
    for (std::size_t n = 0; n < n_el; ++n)
        beta[n] = std::conj(steer[target * n_el + n]) * inv_n;
    return beta;
}

double noise_of(const std::vector<cplx> &beta, double sigma0)
{
    double acc = 0.0;
    for (const auto &b : beta)
        acc += std::norm(b);
    return sigma0 * sigma0 * acc;
}

struct EffTrial
{
    double frac_ineff;
    double eff_count;
};

EffTrial effectiveness_trial(const ChannelRealization &ch, const AntennaArray &array)
{
    const std::size_t m_paths = ch.size();
    const std::size_t n_el = array.size();
    const auto steer = steering_matrix(ch, array);
    const double inv_n = 1.0 / static_cast<double>(n_el);
    std::size_t effective = 0;
    for (std::size_t h = 0; h < m_paths; ++h)
    {
        cplx x(0.0);
        for (std::size_t m = 0; m < m_paths; ++m)
        {
            if (m == h)
                continue;
            // F_m(k_h) = (1/N) sum_n conj(S[m,n]) S[h,n]
            cplx f(0.0);
            for (std::size_t n = 0; n < n_el; ++n)
                f += std::conj(steer[m * n_el + n]) * steer[h * n_el + n];
            x += std::conj(ch[m].alpha) * f * inv_n;
        }
        if (std::abs(ch[h].alpha) >= std::abs(x))
            ++effective;
    }
    const double eff = static_cast<double>(effective);
    return {1.0 - eff / static_cast<double>(m_paths), eff};
}

struct SnrTrial
{
    double mrc;
    double single;
};

} // namespace

double band_average_gain(const BeamWeights &weights, const ChannelRealization &channel, const AntennaArray &array,
                         double bandwidth, std::size_t freq_points)
{
    if (weights.size() != array.size())
        throw std::invalid_argument("band_average_gain: weight count does not match the array size");
    if (!(bandwidth >= 0.0))
        throw std::invalid_argument("band_average_gain: bandwidth must be non-negative");
    if (freq_points == 0)
        throw std::invalid_argument("band_average_gain: at least one frequency point is required");
    const auto steer = steering_matrix(channel, array);
    const auto g = path_gains(weights.coefficients, channel, steer);
    std::vector<cplx> scratch;
    return band_average_from_gains(g, channel, bandwidth, freq_points, scratch);
}

std::vector<EffectivenessPoint> run_effectiveness_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();
    const AntennaArray array = cfg.array();
    const FieldOfView fov = cfg.fov();
    const std::size_t n_m = cfg.m_values.size();
    const std::size_t total = n_m * cfg.trials;
    std::vector<EffTrial> out(total);

#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_workers(cfg.workers))
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i)
    {
        const std::size_t mi = static_cast<std::size_t>(i) / cfg.trials;
        const std::size_t t = static_cast<std::size_t>(i) % cfg.trials;
        const std::size_t m_paths = cfg.m_values[mi];
        Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t));
        const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
        out[static_cast<std::size_t>(i)] = effectiveness_trial(ch, array);
    }

    std::vector<EffectivenessPoint> points;
    points.reserve(n_m);
    std::vector<double> frac(cfg.trials), count(cfg.trials);
    for (std::size_t mi = 0; mi < n_m; ++mi)
    {
        for (std::size_t t = 0; t < cfg.trials; ++t)
        {
            frac[t] = out[mi * cfg.trials + t].frac_ineff;
            count[t] = out[mi * cfg.trials + t].eff_count;
        }
        points.push_back({cfg.m_values[mi], cfg.trials, summarize(frac), summarize(count), median(count)});
    }
    return points;
}

std::vector<SnrPoint> run_snr_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();
    const AntennaArray array = cfg.array();
    const FieldOfView fov = cfg.fov();
    const std::size_t n_el = array.size();
    const std::size_t n_m = cfg.m_values.size();
    const std::size_t total = n_m * cfg.trials;
    std::vector<SnrTrial> out(total);

#pragma omp parallel num_threads(resolve_workers(cfg.workers))
    {
        std::vector<cplx> scratch;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i)
        {
            const std::size_t mi = static_cast<std::size_t>(i) / cfg.trials;
            const std::size_t t = static_cast<std::size_t>(i) % cfg.trials;
            const std::size_t m_paths = cfg.m_values[mi];
            Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t));
            const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
            const auto steer = steering_matrix(ch, array);

            const auto b_mrc = mrc_from_steering(ch, steer, n_el);
            const auto b_single = single_from_steering(strongest_component(ch), steer, n_el);
            const double g_mrc =
                band_average_from_gains(path_gains(b_mrc, ch, steer), ch, cfg.bandwidth, cfg.freq_points, scratch);
            const double g_single = band_average_from_gains(path_gains(b_single, ch, steer), ch, cfg.bandwidth,
                                                            cfg.freq_points, scratch);
            out[static_cast<std::size_t>(i)] = {g_mrc / noise_of(b_mrc, cfg.sigma0),
                                                g_single / noise_of(b_single, cfg.sigma0)};
        }
    }

    std::vector<SnrPoint> points;
    points.reserve(n_m);
    std::vector<double> mrc(cfg.trials), single(cfg.trials);
    for (std::size_t mi = 0; mi < n_m; ++mi)
    {
        for (std::size_t t = 0; t < cfg.trials; ++t)
        {
            mrc[t] = out[mi * cfg.trials + t].mrc;
            single[t] = out[mi * cfg.trials + t].single;
        }
        points.push_back({cfg.m_values[mi], cfg.trials, summarize(mrc), summarize(single)});
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
    const std::size_t n_el = array.size();
    std::vector<SnrTrial> out(cfg.trials);

#pragma omp parallel num_threads(resolve_workers(cfg.workers))
    {
        std::vector<cplx> scratch;
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cfg.trials); ++i)
        {
            const auto t = static_cast<std::size_t>(i);
            Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t), StreamKind::Blockage);
            const auto ch = sample_channel(m_paths, fov, cfg.delay_max, rng);
            const std::size_t blocked = std::uniform_int_distribution<std::size_t>(0, m_paths - 1)(rng);
            const auto steer = steering_matrix(ch, array);

            const auto b_mrc = mrc_from_steering(ch, steer, n_el);
            const auto b_single = single_from_steering(strongest_component(ch), steer, n_el);
            auto g_mrc = path_gains(b_mrc, ch, steer);
            auto g_single = path_gains(b_single, ch, steer);
            // removing path m' from the channel drops its term from the sum
            g_mrc[blocked] = cplx(0.0);
            g_single[blocked] = cplx(0.0);
            out[t] = {band_average_from_gains(g_mrc, ch, cfg.bandwidth, cfg.freq_points, scratch) /
                          noise_of(b_mrc, cfg.sigma0),
                      band_average_from_gains(g_single, ch, cfg.bandwidth, cfg.freq_points, scratch) /
                          noise_of(b_single, cfg.sigma0)};
        }
    }

    BlockageSamples res;
    res.m_paths = m_paths;
    res.mrc_db.reserve(cfg.trials);
    res.single_db.reserve(cfg.trials);
    for (const auto &o : out)
    {
        // a path in an exact null can leave zero gain; keep the dB value finite
        res.mrc_db.push_back(to_db(std::max(o.mrc, 1e-30)));
        res.single_db.push_back(to_db(std::max(o.single, 1e-30)));
    }
    std::sort(res.mrc_db.begin(), res.mrc_db.end());
    std::sort(res.single_db.begin(), res.single_db.end());
    return res;
}

} // namespace mrcbeam
