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

#include "mrcbeam/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <stdexcept>

#ifndef MRCBEAM_VERSION
#define MRCBEAM_VERSION "0.0.0"
#endif
#ifndef MRCBEAM_GIT_COMMIT
#define MRCBEAM_GIT_COMMIT "unknown"
#endif

namespace mrcbeam
{

namespace
{

std::string cell_text(const Cell &c)
{
    if (const auto *d = std::get_if<double>(&c))
        return fmt::format("{}", *d);
    if (const auto *i = std::get_if<std::int64_t>(&c))
        return fmt::format("{}", *i);
    return std::get<std::string>(c);
}

Cell count(std::size_t n)
{
    return static_cast<std::int64_t>(n);
}

} // namespace

std::string format_csv(const Table &table)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out += (i ? "," : "") + table.header[i];
    out += '\n';
    for (const auto &row : table.rows)
    {
        if (row.size() != table.header.size())
            throw std::logic_error("format_csv: row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + cell_text(row[i]);
        out += '\n';
    }
    return out;
}

nlohmann::json table_to_json(const Table &table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows)
    {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i)
            std::visit([&](const auto &v) { obj[table.header[i]] = v; }, row[i]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

nlohmann::json config_to_json(const ExperimentConfig &cfg)
{
    return {
        {"n_elements", cfg.n_elements},
        {"spacing_wavelengths", cfg.spacing_wavelengths},
        {"fov_deg", cfg.fov_deg},
        {"m_values", cfg.m_values},
        {"trials", cfg.trials},
        {"delay_max_ns", cfg.delay_max * 1e9},
        {"bandwidth_hz", cfg.bandwidth},
        {"freq_points", cfg.freq_points},
        {"sigma0", cfg.sigma0},
        {"seed", cfg.seed},
        {"samples", cfg.samples},
        {"harmonic", cfg.harmonic == HarmonicMode::ExactHarmonic ? "exact" : "approx"},
    };
}

nlohmann::json run_metadata()
{
    return {{"tool", "mrcbeam"}, {"version", MRCBEAM_VERSION}, {"git_commit", MRCBEAM_GIT_COMMIT}};
}

void write_output(const Output &output, OutputFormat format, const std::string &path, std::ostream &stdout_stream)
{
    const std::string text = format == OutputFormat::Csv ? format_csv(output.table) : output.json.dump(2) + "\n";
    if (path.empty() || path == "-")
    {
        stdout_stream << text;
        stdout_stream.flush();
        if (!stdout_stream)
            throw std::runtime_error("failed to write to standard output");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << text;
    f.close();
    if (!f)
        throw std::runtime_error("failed to write output file: " + path);
}

Table array_param_table(std::size_t n_elements, double fov_deg, const ArrayParameterEstimate &est)
{
    return {{"n_elements", "fov_deg", "s", "stderr", "samples"},
            {{count(n_elements), fov_deg, est.s, est.std_error, count(est.samples)}}};
}

Table ineffectiveness_table(const std::vector<EffectivenessPoint> &points, double s)
{
    Table t{{"m", "theory", "empirical", "stderr"}, {}};
    for (const auto &p : points)
        t.rows.push_back({count(p.m_paths), p_ineff(p.m_paths, s), p.p_ineff.mean, p.p_ineff.std_error});
    return t;
}

Table effective_components_table(const std::vector<EffectivenessPoint> &points, double s)
{
    Table t{{"m", "theory", "empirical", "stderr"}, {}};
    for (const auto &p : points)
        t.rows.push_back({count(p.m_paths), effective_count(p.m_paths, s), p.eff_count.mean, p.eff_count.std_error});
    return t;
}

Table snr_table(const std::vector<SnrPoint> &points, std::size_t n_elements, double s, double sigma0,
                HarmonicMode mode)
{
    Table t{{"m", "mrc_theory_db", "mrc_sim_db", "single_theory_db", "single_sim_db"}, {}};
    for (const auto &p : points)
        t.rows.push_back({count(p.m_paths), to_db(snr_mrc_theory(n_elements, p.m_paths, s, sigma0)), p.mrc_db(),
                          to_db(snr_single_theory(n_elements, p.m_paths, s, sigma0, mode)), p.single_db()});
    return t;
}

Table blockage_table(const BlockageSamples &samples)
{
    Table t{{"beam_kind", "snr_db"}, {}};
    for (const double v : samples.mrc_db)
        t.rows.push_back({std::string(to_string(BeamKind::Mrc)), v});
    for (const double v : samples.single_db)
        t.rows.push_back({std::string(to_string(BeamKind::SingleDirection)), v});
    return t;
}

Table pattern_table(const std::vector<PatternSample> &pattern)
{
    Table t{{"theta_deg", "gain_db"}, {}};
    for (const auto &p : pattern)
        t.rows.push_back({p.theta_deg, p.gain_db});
    return t;
}

Table theory_table(const std::vector<TheoryCurvePoint> &curve)
{
    Table t{{"m", "value"}, {}};
    for (const auto &p : curve)
        t.rows.push_back({count(p.m_paths), p.value});
    return t;
}

Table channel_table(const std::vector<ChannelRealization> &channels)
{
    Table t{{"trial", "m", "re", "im", "kx", "ky", "kz", "delay_ns"}, {}};
    for (std::size_t i = 0; i < channels.size(); ++i)
        for (std::size_t m = 0; m < channels[i].size(); ++m)
        {
            const auto &c = channels[i][m];
            t.rows.push_back({count(i), count(m), c.alpha.real(), c.alpha.imag(), c.direction.x(), c.direction.y(),
                              c.direction.z(), c.delay * 1e9});
        }
    return t;
}

} // namespace mrcbeam
