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

// Acceptance report. Prints one PASS/FAIL line per criterion, with the
// measured values that decided it. `--only K` runs a single criterion.
// Exits non-zero if any selected criterion fails.

#include "mrcbeam/cli.hpp"
#include "mrcbeam/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace mrcbeam;

namespace
{

// Tolerances and reference marks.
constexpr double table_tol = 0.02;
constexpr double table_seconds = 10.0;
constexpr std::size_t table_samples = 100000;
constexpr double pineff_theory_tol = 0.02;
constexpr double pineff_mc_tol = 0.05;
constexpr double count_mc_tol = 0.5;
constexpr double curve_seconds = 60.0;
constexpr double snr_theory_tol_db = 0.1;
constexpr double snr_sim_tol_db = 0.5;
constexpr double ratio_tol = 0.01;
constexpr double tail_gap_db = 1.0;
constexpr double identity_rel_tol = 1e-9;
constexpr std::size_t mc_trials = 1000;
constexpr std::uint64_t seed = 1;

struct Outcome
{
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what)
    {
        pass = pass && ok;
        detail += (ok ? "  ok   " : "  MISS ") + what + "\n";
    }
};

std::string line(const char *f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double estimate_s(std::size_t n, double fov_deg)
{
    return estimate_array_parameter(make_ula(n), FieldOfView::from_total_degrees(fov_deg), table_samples, seed).s;
}

ExperimentConfig base_config(std::size_t n, std::vector<std::size_t> ms)
{
    ExperimentConfig cfg;
    cfg.n_elements = n;
    cfg.m_values = std::move(ms);
    cfg.trials = mc_trials;
    cfg.seed = seed;
    return cfg;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> v;
    for (std::size_t m = lo; m <= hi; ++m)
        v.push_back(m);
    return v;
}

Outcome array_parameter_table()
{
    struct Cell
    {
        std::size_t n;
        double fov;
        double table;
    };
    const std::vector<Cell> cells{{2, 180, 0.55},  {2, 120, 0.50},  {2, 60, 0.69},  {4, 180, 0.30},  {4, 120, 0.26},
                                  {4, 60, 0.40},   {8, 180, 0.17},  {8, 120, 0.14},  {8, 60, 0.22},  {16, 180, 0.09},
                                  {16, 120, 0.07}, {16, 60, 0.12},  {32, 180, 0.05}, {32, 120, 0.04}, {32, 60, 0.06},
                                  {64, 180, 0.03}, {64, 120, 0.02}, {64, 60, 0.03}};
    Outcome o;
    for (const auto &c : cells)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double s = estimate_s(c.n, c.fov);
        const double dt = seconds_since(t0);
        o.check(std::abs(s - c.table) <= table_tol && dt < table_seconds,
                line("N=%zu fov=%g: s=%.4f table=%.2f |d|=%.4f (<=%.2f) time=%.2fs (<%gs)", c.n, c.fov, s, c.table,
                    std::abs(s - c.table), table_tol, dt, table_seconds));
    }
    return o;
}

Outcome ineffectiveness_theory()
{
    struct Spot
    {
        std::size_t n, m;
        double plotted;
    };
    Outcome o;
    for (const auto &p : {Spot{8, 6, 0.4459}, Spot{16, 10, 0.4300}, Spot{32, 15, 0.3756}})
    {
        const double s = estimate_s(p.n, 180);
        const double v = p_ineff(p.m, s);
        o.check(std::abs(v - p.plotted) <= pineff_theory_tol,
                line("N=%zu M=%zu: s=%.5f p_ineff=%.4f plotted=%.4f |d|=%.4f (<=%.2f)", p.n, p.m, s, v, p.plotted,
                    std::abs(v - p.plotted), pineff_theory_tol));
    }
    return o;
}

Outcome ineffectiveness_monte_carlo()
{
    Outcome o;
    struct Spot
    {
        std::size_t n, m;
        bool count;
        double mark;
    };
    for (const auto &p : {Spot{8, 8, false, 0.4745}, Spot{16, 15, true, 7.994}, Spot{32, 10, true, 7.927}})
    {
        // whole curve M = 1..15, timed
        const auto t0 = std::chrono::steady_clock::now();
        const auto pts = run_effectiveness_sweep(base_config(p.n, range(1, 15)));
        const double dt = seconds_since(t0);
        const auto &pt = pts.at(p.m - 1);
        const double v = p.count ? pt.eff_count.mean : pt.p_ineff.mean;
        const double tol = p.count ? count_mc_tol : pineff_mc_tol;
        o.check(std::abs(v - p.mark) <= tol && dt < curve_seconds,
                line("N=%zu M=%zu %s=%.4f (median %.1f) mark=%.4f |d|=%.4f (<=%.2f) curve time=%.1fs (<%gs)", p.n,
                    p.m, p.count ? "count" : "p_ineff", v, pt.eff_count_median, p.mark, std::abs(v - p.mark), tol, dt,
                    curve_seconds));
    }
    return o;
}

Outcome snr_sweeps()
{
    Outcome o;
    const double s8 = estimate_s(8, 180), s32 = estimate_s(32, 180);
    const auto th = [&](const char *label, double v, double plotted) {
        o.check(std::abs(v - plotted) <= snr_theory_tol_db,
                line("theory %s: %.3f dB plotted=%.3f |d|=%.3f (<=%.1f)", label, v, plotted, std::abs(v - plotted),
                    snr_theory_tol_db));
    };
    th("N=8 MRC M=1", to_db(snr_mrc_theory(8, 1, s8, 1.0)), 12.041);
    th("N=8 single M=1", to_db(snr_single_theory(8, 1, s8, 1.0)), 6.644);
    th("N=8 single M=20", to_db(snr_single_theory(8, 20, s8, 1.0)), 17.317);
    th("N=32 MRC M=20", to_db(snr_mrc_theory(32, 20, s32, 1.0)), 19.760);

    const auto sim = [&](const char *label, std::size_t n, std::size_t m, double mark) {
        const double v = run_snr_sweep(base_config(n, {m})).front().mrc_db();
        o.check(std::abs(v - mark) <= snr_sim_tol_db,
                line("simulation %s: %.3f dB mark=%.3f |d|=%.3f (<=%.1f)", label, v, mark, std::abs(v - mark),
                    snr_sim_tol_db));
    };
    sim("N=8 M=1 MRC", 8, 1, 9.153);
    sim("N=16 M=10 MRC", 16, 10, 16.088);
    return o;
}

Outcome convergence()
{
    Outcome o;
    const double s = 0.17;
    for (const auto mode : {HarmonicMode::ApproxLogGamma, HarmonicMode::ExactHarmonic})
    {
        const double r = snr_ratio_theory(100000, s, mode);
        o.check(std::abs(r - 1.0) < ratio_tol,
                line("M=1e5 s=0.17 %s: ratio=%.6f |r-1|=%.2e (<%.2f)",
                    mode == HarmonicMode::ExactHarmonic ? "H_M" : "ln M + gamma", r, std::abs(r - 1.0), ratio_tol));
        double prev = 1e300;
        bool shrinking = true;
        for (std::size_t m = 1000; m <= 100000; m *= 10)
        {
            const double gap = std::abs(snr_ratio_theory(m, s, mode) - 1.0);
            shrinking = shrinking && gap < prev;
            prev = gap;
        }
        o.check(shrinking, "|ratio - 1| shrinks over M = 1e3, 1e4, 1e5");
    }
    return o;
}

Outcome blockage()
{
    Outcome o;
    const auto b = run_blockage_experiment(base_config(8, {20}));
    const double mrc5 = percentile(b.mrc_db, 5), single5 = percentile(b.single_db, 5);
    const double mrc1 = percentile(b.mrc_db, 1), single1 = percentile(b.single_db, 1);
    o.check(mrc5 > single5, line("5th percentile: mrc=%.3f dB single=%.3f dB (mrc > single)", mrc5, single5));
    o.check(mrc1 - single1 >= tail_gap_db,
            line("1st percentile: mrc=%.3f dB single=%.3f dB gap=%.3f dB (>=%.1f)", mrc1, single1, mrc1 - single1,
                tail_gap_db));
    return o;
}

bool close(cplx a, cplx b)
{
    return std::abs(a - b) <= identity_rel_tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

Outcome identities()
{
    Outcome o;
    for (const std::size_t n : {1, 2, 8, 32})
        for (const std::size_t m : {1, 2, 6, 20})
        {
            const auto array = make_ula(n);
            const FieldOfView fov(std::numbers::pi / 2);
            std::size_t decomp = 0, eq10 = 0, self = 0, bound = 0, optimal = 0;
            for (std::size_t c = 0; c < 100; ++c)
            {
                Rng rng = trial_rng(seed, trial_index(m, c) ^ (static_cast<std::uint64_t>(n) << 48));
                const auto ch = sample_channel(m, fov, 100e-9, rng);
                const auto w = mrc_weights(ch, array);
                const Direction probe = sample_direction(fov, rng);

                decomp += close(decompose(ch, array, probe).sum(), array_factor(w, array, probe));
                bool ok10 = true, ok_self = true, ok_bound = true;
                for (std::size_t h = 0; h < m; ++h)
                {
                    ok10 = ok10 && close(array_factor(w, array, ch[h].direction),
                                         std::conj(ch[h].alpha) + interference_term(ch, array, h));
                    ok_self = ok_self && close(component_array_factor(array, ch[h].direction, ch[h].direction), 1.0);
                    ok_bound = ok_bound &&
                               std::abs(component_array_factor(array, ch[h].direction, probe)) <= 1.0 + identity_rel_tol;
                }
                eq10 += ok10;
                self += ok_self;
                bound += ok_bound;

                const double best = std::norm(combined_response(w, ch, array, 0.0)) / noise_power(w, 1.0);
                std::normal_distribution<double> g(0.0, 1.0);
                bool ok_opt = true;
                for (int i = 0; i < 1000; ++i)
                {
                    BeamWeights v{std::vector<cplx>(n), BeamKind::Mrc};
                    for (auto &x : v.coefficients)
                        x = cplx(g(rng), g(rng));
                    const double snr = std::norm(combined_response(v, ch, array, 0.0)) / noise_power(v, 1.0);
                    ok_opt = ok_opt && snr <= best * (1.0 + identity_rel_tol);
                }
                optimal += ok_opt;
            }
            o.check(decomp == 100 && eq10 == 100 && self == 100 && bound == 100 && optimal == 100,
                    line("N=%zu M=%zu: decomposition %zu/100, F(k_h)=a_h*+X_h %zu/100, F_m(k_m)=1 %zu/100, "
                        "|F_m|<=1 %zu/100, MRC optimal %zu/100",
                        n, m, decomp, eq10, self, bound, optimal));
        }
    return o;
}

std::string run_captured(std::vector<std::string> args, int workers, int &code)
{
    args.push_back("--workers");
    args.push_back(std::to_string(workers));
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str() + err.str();
}

Outcome determinism()
{
    Outcome o;
    const std::vector<std::vector<std::string>> experiments{
        {"array-param", "-N", "16", "--samples", "100000"},
        {"ineffectiveness", "-N", "8", "--m-max", "15", "--trials", "300"},
        {"effective-components", "-N", "32", "--m-max", "15", "--trials", "300"},
        {"snr-sweep", "-N", "8", "--m-max", "20", "--trials", "100"},
        {"blockage-cdf", "-N", "8", "--m-paths", "20", "--trials", "200"},
        {"beam-pattern", "-N", "8", "--m-paths", "6", "--grid-deg", "0.25"},
        {"dump-channel", "--m-paths", "5", "--trials", "10"},
    };
    for (const auto &base : experiments)
        for (const char *format : {"csv", "json"})
        {
            auto args = base;
            args.insert(args.end(), {"--format", format, "--seed", "1234"});
            int c1 = 0, c1b = 0, c4 = 0, c16 = 0;
            const std::string a = run_captured(args, 1, c1);
            const std::string b = run_captured(args, 1, c1b);
            const std::string c = run_captured(args, 4, c4);
            const std::string d = run_captured(args, 16, c16);
            const bool ok = c1 == 0 && c1b == 0 && c4 == 0 && c16 == 0 && !a.empty() && a == b && a == c && a == d;
            o.check(ok, line("%s --format %s: %zu bytes, identical under 1/1/4/16 workers: %s", base[0].c_str(), format,
                            a.size(), ok ? "yes" : "no"));
        }
    return o;
}

struct Criterion
{
    int id;
    const char *title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);

    const std::vector<Criterion> criteria{
        {1, "array parameter table, 18 cells", array_parameter_table},
        {2, "ineffectiveness probability, closed form at plotted spot points", ineffectiveness_theory},
        {3, "ineffectiveness and effective count, 1000-trial Monte Carlo marks", ineffectiveness_monte_carlo},
        {4, "SNR sweeps, closed form and 1000-trial simulation", snr_sweeps},
        {5, "single/MRC SNR ratio tends to 1", convergence},
        {6, "blockage tail: MRC beats the single beam", blockage},
        {7, "beam identities over 100 random channels per (N, M)", identities},
        {8, "byte-identical output under 1, 4 and 16 workers", determinism},
    };

    int failed = 0, ran = 0;
    for (const auto &c : criteria)
    {
        if (only != 0 && c.id != only)
            continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        std::printf("%s criterion %d: %s (%.1fs)\n%s", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds_since(t0),
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    if (ran == 0)
    {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
