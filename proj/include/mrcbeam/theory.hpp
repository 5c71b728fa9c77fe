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

#ifndef MRCBEAM_THEORY_HPP
#define MRCBEAM_THEORY_HPP

#include "mrcbeam/geometry.hpp"

#include <cstdint>
#include <vector>

namespace mrcbeam
{

inline constexpr double euler_gamma = 0.57721566490153286;

// Array parameter s = E[|F_m(k_1)|^2] for two independent directions drawn
// from the FOV. It is the variance scale of the cross-beam interference: the
// closed forms below all take s where the interference variance per
// interfering path appears.
struct ArrayParameterEstimate
{
    double s = 0.0;
    std::size_t samples = 0;
    double std_error = 0.0;
};

// Monte Carlo estimate of s. Samples are split into fixed-size chunks, each
// with its own stream (seed, chunk), and reduced in chunk order: the result
// does not depend on the worker count. workers <= 0 uses the OpenMP default.
ArrayParameterEstimate estimate_array_parameter(const AntennaArray &array, const FieldOfView &fov,
                                                std::size_t samples, std::uint64_t seed, int workers = 0);

inline constexpr std::size_t array_parameter_chunk = 4096;

// |(1/N) sum_n e^{-j phi_{n,k_m}} e^{j phi_{n,k_1}}|^2 for one direction pair.
double pair_gain(const AntennaArray &array, const Direction &k_m, const Direction &k_1);

enum class HarmonicMode
{
    ApproxLogGamma, // ln M + gamma
    ExactHarmonic,  // H_M
};

double harmonic_number(std::size_t m);

// P[|X| >= |alpha_1| given |alpha_1| = z] = exp(-z^2 / ((M-1) s))
double p_ineff_conditional(double z, std::size_t m_paths, double s);

// (M-1)s / (1 + (M-1)s)
double p_ineff(std::size_t m_paths, double s);

// M (1 - p_ineff) = M / (1 + (M-1)s)
double effective_count(std::size_t m_paths, double s);

// Average-signal over average-noise for the MRC beam: N (2 + (M-1)s) / sigma0^2.
// Overestimates the M = 1 case by exactly 3 dB (2N instead of N).
double snr_mrc_theory(std::size_t n_elements, std::size_t m_paths, double s, double sigma0);

// Single beam on the strongest path: N (H_M + (M-1)s) / sigma0^2, with H_M
// either exact or approximated by ln M + gamma.
double snr_single_theory(std::size_t n_elements, std::size_t m_paths, double s, double sigma0,
                         HarmonicMode mode = HarmonicMode::ApproxLogGamma);

// snr_single_theory / snr_mrc_theory; tends to 1 as M grows.
double snr_ratio_theory(std::size_t m_paths, double s, HarmonicMode mode = HarmonicMode::ApproxLogGamma);

double to_db(double linear);

enum class TheoryQuantity
{
    Pineff,
    Ceff,
    SnrMrcDb,
    SnrSingleDb,
    SnrRatio,
};

const char *to_string(TheoryQuantity q);

struct TheoryCurvePoint
{
    std::size_t m_paths;
    double value;
    TheoryQuantity quantity;
};

std::vector<TheoryCurvePoint> theory_curve(TheoryQuantity quantity, const std::vector<std::size_t> &m_values,
                                           std::size_t n_elements, double s, double sigma0 = 1.0,
                                           HarmonicMode mode = HarmonicMode::ApproxLogGamma);

} // namespace mrcbeam

#endif
