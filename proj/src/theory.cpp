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

#include "mrcbeam/theory.hpp"

#include "mrcbeam/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace mrcbeam
{

namespace
{

void check_s(double s)
{
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("array parameter must be finite and non-negative");
}

void check_snr_args(std::size_t n, std::size_t m, double s, double sigma0)
{
    if (n == 0 || m == 0)
        throw std::invalid_argument("element and path counts must be positive");
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("sigma0 must be positive");
    check_s(s);
}

struct ChunkSums
{
    double sum = 0.0;
    double sum_sq = 0.0;
};

} // namespace

double pair_gain(const AntennaArray &array, const Direction &k_m, const Direction &k_1)
{
    const Vec3 d = k_1.vector() - k_m.vector();
    double re = 0.0, im = 0.0;
    for (const auto &p : array.positions())
    {
        const double ph = two_pi * p.dot(d);
        re += std::cos(ph);
        im += std::sin(ph);
    }
    const double inv_n = 1.0 / static_cast<double>(array.size());
    re *= inv_n;
    im *= inv_n;
    return re * re + im * im;
}

ArrayParameterEstimate estimate_array_parameter(const AntennaArray &array, const FieldOfView &fov,
                                                std::size_t samples, std::uint64_t seed, int workers)
{
    if (samples == 0)
        throw std::invalid_argument("estimate_array_parameter: at least one sample is required");

    const std::size_t chunks = (samples + array_parameter_chunk - 1) / array_parameter_chunk;
    std::vector<ChunkSums> partial(chunks);
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c)
    {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(c), StreamKind::ArrayParameter);
        const std::size_t begin = static_cast<std::size_t>(c) * array_parameter_chunk;
        const std::size_t end = std::min(samples, begin + array_parameter_chunk);
        ChunkSums acc;
        for (std::size_t i = begin; i < end; ++i)
        {
            const Direction k1 = sample_direction(fov, rng);
            const Direction km = sample_direction(fov, rng);
            const double g = pair_gain(array, km, k1);
            acc.sum += g;
            acc.sum_sq += g * g;
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }

    ChunkSums total;
    for (const auto &p : partial)
    {
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
    }
    const double n = static_cast<double>(samples);
    ArrayParameterEstimate est;
    est.samples = samples;
    est.s = total.sum / n;
    if (samples > 1)
    {
        const double var = std::max(0.0, (total.sum_sq - n * est.s * est.s) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

double harmonic_number(std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("harmonic_number: m must be at least 1");
    // smallest terms first
    double h = 0.0;
    for (std::size_t k = m; k >= 1; --k)
        h += 1.0 / static_cast<double>(k);
    return h;
}

double p_ineff_conditional(double z, std::size_t m_paths, double s)
{
    if (!(z >= 0.0))
        throw std::invalid_argument("p_ineff_conditional: amplitude must be non-negative");
    if (m_paths == 0)
        throw std::invalid_argument("p_ineff_conditional: path count must be positive");
    check_s(s);
    if (m_paths == 1)
        return 0.0;
    const double var = static_cast<double>(m_paths - 1) * s;
    if (var == 0.0)
        return z == 0.0 ? 1.0 : 0.0;
    return std::exp(-z * z / var);
}

double p_ineff(std::size_t m_paths, double s)
{
    if (m_paths == 0)
        throw std::invalid_argument("p_ineff: path count must be positive");
    check_s(s);
    const double v = static_cast<double>(m_paths - 1) * s;
    return v / (1.0 + v);
}

double effective_count(std::size_t m_paths, double s)
{
    if (m_paths == 0)
        throw std::invalid_argument("effective_count: path count must be positive");
    check_s(s);
    return static_cast<double>(m_paths) / (1.0 + static_cast<double>(m_paths - 1) * s);
}

double snr_mrc_theory(std::size_t n_elements, std::size_t m_paths, double s, double sigma0)
{
    check_snr_args(n_elements, m_paths, s, sigma0);
    return static_cast<double>(n_elements) * (2.0 + static_cast<double>(m_paths - 1) * s) / (sigma0 * sigma0);
}

double snr_single_theory(std::size_t n_elements, std::size_t m_paths, double s, double sigma0, HarmonicMode mode)
{
    check_snr_args(n_elements, m_paths, s, sigma0);
    const double peak = mode == HarmonicMode::ExactHarmonic ? harmonic_number(m_paths)
                                                            : std::log(static_cast<double>(m_paths)) + euler_gamma;
    return static_cast<double>(n_elements) * (peak + static_cast<double>(m_paths - 1) * s) / (sigma0 * sigma0);
}

double snr_ratio_theory(std::size_t m_paths, double s, HarmonicMode mode)
{
    return snr_single_theory(1, m_paths, s, 1.0, mode) / snr_mrc_theory(1, m_paths, s, 1.0);
}

double to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

const char *to_string(TheoryQuantity q)
{
    switch (q)
    {
    case TheoryQuantity::Pineff:
        return "pineff";
    case TheoryQuantity::Ceff:
        return "ceff";
    case TheoryQuantity::SnrMrcDb:
        return "snr_mrc_db";
    case TheoryQuantity::SnrSingleDb:
        return "snr_single_db";
    case TheoryQuantity::SnrRatio:
        return "snr_ratio";
    }
    return "unknown";
}

std::vector<TheoryCurvePoint> theory_curve(TheoryQuantity quantity, const std::vector<std::size_t> &m_values,
                                           std::size_t n_elements, double s, double sigma0, HarmonicMode mode)
{
    std::vector<TheoryCurvePoint> out;
    out.reserve(m_values.size());
    for (const std::size_t m : m_values)
    {
        double v = 0.0;
        switch (quantity)
        {
        case TheoryQuantity::Pineff:
            v = p_ineff(m, s);
            break;
        case TheoryQuantity::Ceff:
            v = effective_count(m, s);
            break;
        case TheoryQuantity::SnrMrcDb:
            v = to_db(snr_mrc_theory(n_elements, m, s, sigma0));
            break;
        case TheoryQuantity::SnrSingleDb:
            v = to_db(snr_single_theory(n_elements, m, s, sigma0, mode));
            break;
        case TheoryQuantity::SnrRatio:
            v = snr_ratio_theory(m, s, mode);
            break;
        }
        out.push_back({m, v, quantity});
    }
    return out;
}

} // namespace mrcbeam
