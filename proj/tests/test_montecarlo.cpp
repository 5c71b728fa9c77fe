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

#include "mrcbeam/montecarlo.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mrcbeam;
constexpr double pi = std::numbers::pi;

namespace
{

ExperimentConfig small_config()
{
    ExperimentConfig cfg;
    cfg.n_elements = 8;
    cfg.m_values = {1, 3, 6};
    cfg.trials = 200;
    cfg.freq_points = 256;
    cfg.seed = 42;
    return cfg;
}

void expect_same(const SampleStats &a, const SampleStats &b, double tol)
{
    EXPECT_NEAR(a.mean, b.mean, tol * std::max(1.0, std::abs(a.mean)));
    EXPECT_NEAR(a.std_error, b.std_error, tol * std::max(1.0, std::abs(a.std_error)));
}

} // namespace

TEST(Stats, SummarizeAndPercentile)
{
    const auto st = summarize({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(st.mean, 2.5);
    EXPECT_NEAR(st.std_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
    EXPECT_DOUBLE_EQ(median({5.0, 1.0, 3.0}), 3.0);
    EXPECT_DOUBLE_EQ(median({4.0, 1.0, 3.0, 2.0}), 2.5);
    const std::vector<double> v{0.0, 10.0, 20.0, 30.0, 40.0};
    EXPECT_DOUBLE_EQ(percentile(v, 0), 0.0);
    EXPECT_DOUBLE_EQ(percentile(v, 100), 40.0);
    EXPECT_DOUBLE_EQ(percentile(v, 5), 2.0);
    EXPECT_DOUBLE_EQ(percentile(v, 50), 20.0);
    EXPECT_THROW(percentile({}, 50), std::invalid_argument);
    EXPECT_THROW(percentile(v, 101), std::invalid_argument);
}

TEST(Config, Validation)
{
    ExperimentConfig ok;
    EXPECT_NO_THROW(ok.validate());
    auto bad = ok;
    bad.n_elements = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = ok;
    bad.m_values = {0};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = ok;
    bad.fov_deg = 190;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = ok;
    bad.trials = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = ok;
    bad.bandwidth = -1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = ok;
    bad.sigma0 = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(BandAverage, TwoPathClosedForm)
{
    const auto array = make_ula(1);
    const cplx a1(0.8, -0.3), a2(-0.4, 0.9);
    const ChannelRealization ch({{a1, Direction(0, 1, 0), 12e-9}, {a2, Direction(1, 1, 0), 73e-9}});
    const BeamWeights w{{cplx(1.0)}, BeamKind::Mrc};
    const double expected = oracle::two_path_band_average(a1, 12e-9, a2, 73e-9, 1e9, 1024);
    EXPECT_NEAR(expected, 1.70115234375, 1e-9);
    EXPECT_NEAR(band_average_gain(w, ch, array, 1e9, 1024), expected, 1e-10);
    EXPECT_NEAR(reference::band_average_gain(w, ch, array, 1e9, 1024), expected, 1e-10);
}

TEST(BandAverage, SinglePathIsFlat)
{
    const auto array = make_ula(8);
    const ChannelRealization ch({{cplx(0.3, 0.4), Direction(0.5, 0.8, 0), 37e-9}});
    const auto w = mrc_weights(ch, array);
    const double center = std::norm(combined_response(w, ch, array, 0.0));
    EXPECT_NEAR(band_average_gain(w, ch, array, 1e9, 1024), center, 1e-12);
    EXPECT_NEAR(band_average_gain(w, ch, array, 1e9, 1), center, 1e-12);
}

TEST(BandAverage, KernelMatchesReference)
{
    const auto array = make_ula(16);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        Rng rng = trial_rng(seed, 0);
        const auto ch = sample_channel(1 + seed, FieldOfView(pi / 2), 100e-9, rng);
        for (const auto &w : {mrc_weights(ch, array),
                              single_direction_weights(array, ch[strongest_component(ch)].direction)})
        {
            const double a = band_average_gain(w, ch, array, 1e9, 1024);
            const double b = reference::band_average_gain(w, ch, array, 1e9, 1024);
            EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, b));
        }
    }
}

TEST(Effectiveness, KernelMatchesReference)
{
    const auto cfg = small_config();
    const auto a = run_effectiveness_sweep(cfg);
    const auto b = reference::run_effectiveness_sweep(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        EXPECT_EQ(a[i].m_paths, b[i].m_paths);
        EXPECT_EQ(a[i].trials, cfg.trials);
        expect_same(a[i].p_ineff, b[i].p_ineff, 1e-12);
        expect_same(a[i].eff_count, b[i].eff_count, 1e-12);
        EXPECT_EQ(a[i].eff_count_median, b[i].eff_count_median);
    }
    EXPECT_EQ(a[0].p_ineff.mean, 0.0);
    EXPECT_EQ(a[0].eff_count.mean, 1.0);
}

TEST(Snr, KernelMatchesReference)
{
    const auto cfg = small_config();
    const auto a = run_snr_sweep(cfg);
    const auto b = reference::run_snr_sweep(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        expect_same(a[i].mrc, b[i].mrc, 1e-10);
        expect_same(a[i].single, b[i].single, 1e-10);
    }
}

TEST(Blockage, KernelMatchesReference)
{
    auto cfg = small_config();
    cfg.m_values = {6};
    const auto a = run_blockage_experiment(cfg);
    const auto b = reference::run_blockage_experiment(cfg);
    ASSERT_EQ(a.mrc_db.size(), cfg.trials);
    ASSERT_EQ(b.single_db.size(), cfg.trials);
    for (std::size_t i = 0; i < cfg.trials; ++i)
    {
        EXPECT_NEAR(a.mrc_db[i], b.mrc_db[i], 1e-9);
        EXPECT_NEAR(a.single_db[i], b.single_db[i], 1e-9);
    }
    EXPECT_TRUE(std::is_sorted(a.mrc_db.begin(), a.mrc_db.end()));
    cfg.m_values = {1};
    EXPECT_THROW(run_blockage_experiment(cfg), std::invalid_argument);
}

TEST(ArrayParameter, KernelMatchesReference)
{
    const auto array = make_ula(8);
    const FieldOfView fov(pi / 2);
    const auto a = estimate_array_parameter(array, fov, 20000, 3);
    const auto b = reference::estimate_array_parameter(array, fov, 20000, 3);
    EXPECT_NEAR(a.s, b.s, 1e-12);
    EXPECT_NEAR(a.std_error, b.std_error, 1e-12);
}

TEST(Determinism, WorkerCountIsIrrelevant)
{
    auto cfg = small_config();
    cfg.workers = 1;
    const auto e1 = run_effectiveness_sweep(cfg);
    const auto s1 = run_snr_sweep(cfg);
    for (int w : {4, 16})
    {
        cfg.workers = w;
        const auto ew = run_effectiveness_sweep(cfg);
        const auto sw = run_snr_sweep(cfg);
        for (std::size_t i = 0; i < e1.size(); ++i)
        {
            EXPECT_EQ(e1[i].p_ineff.mean, ew[i].p_ineff.mean);
            EXPECT_EQ(e1[i].eff_count.std_error, ew[i].eff_count.std_error);
            EXPECT_EQ(s1[i].mrc.mean, sw[i].mrc.mean);
            EXPECT_EQ(s1[i].single.mean, sw[i].single.mean);
        }
    }
}

TEST(Determinism, DoublingTrialsKeepsPrefix)
{
    auto cfg = small_config();
    cfg.m_values = {5};
    cfg.trials = 100;
    const auto short_run = run_blockage_experiment(cfg);
    cfg.trials = 200;
    const auto long_run = run_blockage_experiment(cfg);
    // each of the first 100 trials reappears in the longer run
    for (double v : short_run.mrc_db)
        EXPECT_TRUE(std::binary_search(long_run.mrc_db.begin(), long_run.mrc_db.end(), v));
}

TEST(Determinism, SameSeedSameResult)
{
    const auto cfg = small_config();
    const auto a = run_snr_sweep(cfg);
    const auto b = run_snr_sweep(cfg);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].mrc.mean, b[i].mrc.mean);
    auto other = cfg;
    other.seed = 43;
    EXPECT_NE(run_snr_sweep(other)[1].mrc.mean, a[1].mrc.mean);
}

TEST(Snr, SinglePathBeamsCoincide)
{
    auto cfg = small_config();
    cfg.m_values = {1};
    cfg.trials = 300;
    const auto p = run_snr_sweep(cfg).front();
    // one path: both beams are the same up to a phase and scale
    EXPECT_NEAR(p.mrc.mean, p.single.mean, 1e-9 * p.mrc.mean);
}

TEST(Snr, SinglePathMeanIsProportionalToN)
{
    for (std::size_t n : {4, 16})
    {
        ExperimentConfig cfg;
        cfg.n_elements = n;
        cfg.m_values = {1};
        cfg.trials = 4000;
        cfg.freq_points = 16;
        cfg.seed = 5;
        const auto p = run_snr_sweep(cfg).front();
        // E|alpha|^2 N / sigma0^2 = N
        EXPECT_LE(std::abs(p.mrc.mean - static_cast<double>(n)), 4.0 * p.mrc.std_error);
    }
}

TEST(Snr, ScaleInvariance)
{
    auto cfg = small_config();
    cfg.trials = 50;
    const auto base = run_snr_sweep(cfg);
    cfg.sigma0 = 2.0;
    const auto scaled = run_snr_sweep(cfg);
    for (std::size_t i = 0; i < base.size(); ++i)
    {
        EXPECT_NEAR(scaled[i].mrc.mean * 4.0, base[i].mrc.mean, 1e-12 * base[i].mrc.mean);
        EXPECT_NEAR(scaled[i].single.mean * 4.0, base[i].single.mean, 1e-12 * base[i].single.mean);
    }
}

TEST(Effectiveness, ZeroWidthFieldOfView)
{
    auto cfg = small_config();
    cfg.fov_deg = 0.0;
    cfg.m_values = {1, 4};
    const auto pts = run_effectiveness_sweep(cfg);
    EXPECT_EQ(pts[0].p_ineff.mean, 0.0);
    // all paths share one direction; rarely more than one beats the sum of the rest
    EXPECT_LT(pts[1].eff_count.mean, 1.5);
}
