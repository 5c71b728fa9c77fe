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

#ifndef MRCBEAM_IO_HPP
#define MRCBEAM_IO_HPP

#include "mrcbeam/montecarlo.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mrcbeam
{

enum class OutputFormat
{
    Csv,
    Json,
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

// Doubles print in shortest round-trip form, so equal values give equal bytes.
std::string format_csv(const Table &table);

// Rows as an array of objects keyed by header name.
nlohmann::json table_to_json(const Table &table);

// Everything one command produces. json carries the full document
// (command, echoed config, results, run metadata).
struct Output
{
    Table table;
    nlohmann::json json;
};

nlohmann::json config_to_json(const ExperimentConfig &cfg);
nlohmann::json run_metadata();

// Writes to `path`, or standard output when path is "-" or empty.
// Throws std::runtime_error if the destination cannot be written.
void write_output(const Output &output, OutputFormat format, const std::string &path, std::ostream &stdout_stream);

// Result tables with the column layouts the CLI exposes.
Table array_param_table(std::size_t n_elements, double fov_deg, const ArrayParameterEstimate &est);
Table ineffectiveness_table(const std::vector<EffectivenessPoint> &points, double s);
Table effective_components_table(const std::vector<EffectivenessPoint> &points, double s);
Table snr_table(const std::vector<SnrPoint> &points, std::size_t n_elements, double s, double sigma0,
                HarmonicMode mode);
Table blockage_table(const BlockageSamples &samples);
Table pattern_table(const std::vector<PatternSample> &pattern);
Table theory_table(const std::vector<TheoryCurvePoint> &curve);
Table channel_table(const std::vector<ChannelRealization> &channels);

} // namespace mrcbeam

#endif
