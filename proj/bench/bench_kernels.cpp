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

// Parallel kernels against the serial reference implementations.

#include "mrcbeam/montecarlo.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace mrcbeam;

namespace
{

ExperimentConfig sweep_config(std::size_t trials)
{
    ExperimentConfig cfg;
    cfg.n_elements = 16;
    cfg.m_values = {1, 5, 10, 20};
    cfg.trials = trials;
    cfg.seed = 3;
    return cfg;
}

void band_average(benchmark::State &state, bool reference_impl)
{
    const auto array = make_ula(16);
    Rng rng = trial_rng(1, 0);
    const auto ch = sample_channel(static_cast<std::size_t>(state.range(0)), FieldOfView(std::numbers::pi / 2), 100e-9,
                                   rng);
    const auto w = mrc_weights(ch, array);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference_impl ? reference::band_average_gain(w, ch, array, 1e9, 1024)
                                                : band_average_gain(w, ch, array, 1e9, 1024));
}

void BM_BandAverage(benchmark::State &state) { band_average(state, false); }
void BM_BandAverageReference(benchmark::State &state) { band_average(state, true); }

void BM_ArrayParameter(benchmark::State &state)
{
    const auto array = make_ula(32);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_array_parameter(array, FieldOfView(std::numbers::pi / 2), 100000, 1).s);
}

void BM_ArrayParameterReference(benchmark::State &state)
{
    const auto array = make_ula(32);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            reference::estimate_array_parameter(array, FieldOfView(std::numbers::pi / 2), 100000, 1).s);
}

void BM_SnrSweep(benchmark::State &state)
{
    const auto cfg = sweep_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_snr_sweep(cfg).back().mrc.mean);
}

void BM_SnrSweepReference(benchmark::State &state)
{
    const auto cfg = sweep_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::run_snr_sweep(cfg).back().mrc.mean);
}

void BM_EffectivenessSweep(benchmark::State &state)
{
    const auto cfg = sweep_config(1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_effectiveness_sweep(cfg).back().p_ineff.mean);
}

void BM_EffectivenessSweepReference(benchmark::State &state)
{
    const auto cfg = sweep_config(1000);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::run_effectiveness_sweep(cfg).back().p_ineff.mean);
}

} // namespace

BENCHMARK(BM_BandAverage)->Arg(1)->Arg(20);
BENCHMARK(BM_BandAverageReference)->Arg(1)->Arg(20);
BENCHMARK(BM_ArrayParameter)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArrayParameterReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnrSweep)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnrSweepReference)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EffectivenessSweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EffectivenessSweepReference)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
