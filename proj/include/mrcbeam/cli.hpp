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

#ifndef MRCBEAM_CLI_HPP
#define MRCBEAM_CLI_HPP

#include "mrcbeam/io.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrcbeam
{

enum class CommandKind
{
    ArrayParam,
    Ineffectiveness,
    EffectiveComponents,
    SnrSweep,
    BlockageCdf,
    BeamPattern,
    DumpChannel,
};

const char *to_string(CommandKind kind);

struct Command
{
    CommandKind kind = CommandKind::ArrayParam;
    ExperimentConfig config;
    OutputFormat format = OutputFormat::Csv;
    std::string output = "-";

    // Overrides the Monte Carlo array parameter in theory columns.
    std::optional<double> array_param;
    // Emit only the (m, value) theory curve, no simulation.
    bool theory_only = false;
    TheoryQuantity quantity = TheoryQuantity::Pineff;

    // beam-pattern
    std::string channel_file;
    std::size_t channel_index = 0;
    std::optional<double> example_alpha4;
    double grid_deg = 0.5;
    BeamKind beam = BeamKind::Mrc;
    std::size_t upa_rows = 0; // 0 selects the ULA
    std::size_t upa_cols = 0;
    std::string dump_channel;
};

// Parse failure or help request. exit_code is 0 for --help.
class UsageError : public std::runtime_error
{
  public:
    UsageError(const std::string &message, int exit_code) : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

  private:
    int exit_code_;
};

// "1GHz", "250 MHz", "10e6", "5kHz" -> Hz.
double parse_frequency(const std::string &text);

// args excludes the program name.
Command parse_args(const std::vector<std::string> &args);

Output execute(const Command &cmd);

// Full CLI entry: parse, run, write. Returns the process exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mrcbeam

#endif
