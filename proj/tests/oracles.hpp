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

// Test-only oracles. None of these call into the library's numerical paths;
// they recompute the same quantities by an independent route.

#ifndef MRCBEAM_TESTS_ORACLES_HPP
#define MRCBEAM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

namespace oracle
{

// E[e^{j pi k sin(theta)}] for theta uniform on [-h, h], composite Simpson.
inline double mean_phasor(int k, double half_angle, int intervals = 4000)
{
    if (half_angle == 0.0)
        return 1.0;
    const double a = -half_angle, b = half_angle;
    const double dx = (b - a) / intervals;
    auto f = [&](double t) { return std::cos(std::numbers::pi * k * std::sin(t)); };
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        acc += f(a + i * dx) * (i % 2 ? 4.0 : 2.0);
    return acc * dx / 3.0 / (b - a);
}

// Array parameter of a half-wavelength ULA with the angle uniform on
// [-h, h]: (1/N^2) sum_k (N - |k|) |E e^{j pi k sin theta}|^2.
inline double ula_array_parameter(std::size_t n, double half_angle)
{
    const int N = static_cast<int>(n);
    double acc = 0.0;
    for (int k = -(N - 1); k <= N - 1; ++k)
    {
        const double c = mean_phasor(k, half_angle);
        acc += (N - std::abs(k)) * c * c;
    }
    return acc / (static_cast<double>(N) * N);
}

// Same quantity for the full half-plane, where the mean phasor is J0(pi k).
inline double ula_array_parameter_bessel(std::size_t n)
{
    const int N = static_cast<int>(n);
    double acc = 0.0;
    for (int k = -(N - 1); k <= N - 1; ++k)
    {
        const double c = std::cyl_bessel_j(0.0, std::numbers::pi * std::abs(k));
        acc += (N - std::abs(k)) * c * c;
    }
    return acc / (static_cast<double>(N) * N);
}

// Grid mean of |a1 e^{-j2pi f t1} + a2 e^{-j2pi f t2}|^2 over `points` uniform
// frequencies on [-B/2, B/2], via the closed-form geometric sum.
inline double two_path_band_average(std::complex<double> a1, double t1, std::complex<double> a2, double t2,
                                    double bandwidth, std::size_t points)
{
    using std::complex;
    const double d = t1 - t2;
    const double step = bandwidth / static_cast<double>(points - 1);
    // (1/F) sum_k e^{-j 2 pi f_k d}, f_k = -B/2 + k step
    const complex<double> q = std::polar(1.0, -2.0 * std::numbers::pi * step * d);
    complex<double> geo;
    if (std::abs(1.0 - q) < 1e-14)
        geo = static_cast<double>(points);
    else
        geo = (1.0 - std::pow(q, static_cast<double>(points))) / (1.0 - q);
    const complex<double> mean = std::polar(1.0, std::numbers::pi * bandwidth * d) * geo / static_cast<double>(points);
    return std::norm(a1) + std::norm(a2) + 2.0 * std::real(a1 * std::conj(a2) * mean);
}

} // namespace oracle

#endif
