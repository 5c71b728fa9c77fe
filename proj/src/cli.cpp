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

#include "mrcbeam/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace mrcbeam
{

const char *to_string(CommandKind kind)
{
    switch (kind)
    {
    case CommandKind::ArrayParam:
        return "array-param";
    case CommandKind::Ineffectiveness:
        return "ineffectiveness";
    case CommandKind::EffectiveComponents:
        return "effective-components";
    case CommandKind::SnrSweep:
        return "snr-sweep";
    case CommandKind::BlockageCdf:
        return "blockage-cdf";
    case CommandKind::BeamPattern:
        return "beam-pattern";
    case CommandKind::DumpChannel:
        return "dump-channel";
    }
    return "unknown";
}

double parse_frequency(const std::string &text)
{
    std::size_t pos = 0;
    double value = 0.0;
    try
    {
        value = std::stod(text, &pos);
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("invalid frequency: '" + text + "'");
    }
    std::string unit = text.substr(pos);
    unit.erase(std::remove_if(unit.begin(), unit.end(), [](unsigned char c) { return std::isspace(c); }), unit.end());
    std::transform(unit.begin(), unit.end(), unit.begin(), [](unsigned char c) { return std::tolower(c); });
    static const std::map<std::string, double> scale{{"", 1.0},     {"hz", 1.0},    {"khz", 1e3},
                                                     {"mhz", 1e6}, {"ghz", 1e9}};
    const auto it = scale.find(unit);
    if (it == scale.end() || !std::isfinite(value))
        throw std::invalid_argument("invalid frequency: '" + text + "'");
    return value * it->second;
}

namespace
{

struct Sweep
{
    std::size_t m_min = 1;
    std::size_t m_max = 15;
    std::vector<std::size_t> m_list;

    std::vector<std::size_t> values() const
    {
        if (!m_list.empty())
            return m_list;
        if (m_min == 0 || m_max < m_min)
            throw std::invalid_argument("path range requires 1 <= m-min <= m-max");
        std::vector<std::size_t> v(m_max - m_min + 1);
        std::iota(v.begin(), v.end(), m_min);
        return v;
    }
};

struct Raw
{
    Command cmd;
    Sweep sweep;
    std::size_t m_paths = 0;
    std::string bandwidth = "1GHz";
    double delay_max_ns = 100.0;
    std::string upa;
    std::string snr_quantity = "mrc";
};

void add_common(CLI::App *sc, Raw &raw, bool trials_are_samples, std::size_t default_trials)
{
    auto &cfg = raw.cmd.config;
    cfg.trials = default_trials;
    sc->add_option("-N,--elements", cfg.n_elements, "Number of ULA elements")->capture_default_str();
    sc->add_option("--spacing", cfg.spacing_wavelengths, "Element spacing in wavelengths")->capture_default_str();
    sc->add_option("--fov-deg", cfg.fov_deg, "Total field of view in degrees, centered on broadside")
        ->capture_default_str();
    sc->add_option("--seed", cfg.seed, "Base seed of all random streams")->capture_default_str();
    if (trials_are_samples)
        sc->add_option("--samples,--trials", cfg.samples, "Monte Carlo direction pairs")->capture_default_str();
    else
        sc->add_option("--trials", cfg.trials, "Channel realizations per point")->capture_default_str();
    sc->add_option("-o,--output", raw.cmd.output, "Output path, '-' for standard output")->capture_default_str();
    sc->add_option("--format", raw.cmd.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                                                                {"json", OutputFormat::Json}},
                                            CLI::ignore_case))
        ->option_text("csv|json [csv]");
    sc->add_option("--workers", cfg.workers, "Worker threads (0: all available); results do not depend on it")
        ->capture_default_str();
    sc->add_option("--delay-max-ns", raw.delay_max_ns, "Maximum path delay in ns")->capture_default_str();
    sc->add_option("--bandwidth", raw.bandwidth, "Averaging bandwidth, e.g. 1GHz or 500MHz")->capture_default_str();
    sc->add_option("--freq-points", cfg.freq_points, "Frequency grid points across the band")->capture_default_str();
    sc->add_option("--sigma0", cfg.sigma0, "Per-antenna noise standard deviation")->capture_default_str();
}

void add_theory_s(CLI::App *sc, Raw &raw)
{
    sc->add_option("--samples", raw.cmd.config.samples, "Monte Carlo pairs for the array parameter")
        ->capture_default_str();
    sc->add_option("--array-param", raw.cmd.array_param, "Use this array parameter instead of estimating it");
}

void add_sweep(CLI::App *sc, Raw &raw, std::size_t default_max)
{
    raw.sweep.m_max = default_max;
    sc->add_option("--m-min", raw.sweep.m_min, "Smallest number of paths")->capture_default_str();
    sc->add_option("--m-max", raw.sweep.m_max, "Largest number of paths")->capture_default_str();
    sc->add_option("--m-list", raw.sweep.m_list, "Explicit path counts (overrides the range)")->delimiter(',');
}

} // namespace

Command parse_args(const std::vector<std::string> &args)
{
    CLI::App app{"Geometry and wideband SNR experiments for maximal-ratio-combining beams", "mrcbeam"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // one Raw per subcommand; only the selected one is used
    std::map<CLI::App *, Raw> raws;
    std::map<CLI::App *, CommandKind> kinds;
    auto make = [&](const char *name, const char *desc, CommandKind kind) {
        CLI::App *sc = app.add_subcommand(name, desc);
        kinds[sc] = kind;
        raws[sc].cmd.kind = kind;
        return sc;
    };

    auto *ap = make("array-param",
                    "Estimate the array parameter s = E|F_m(k_1)|^2 for a half-wavelength ULA by Monte Carlo. "
                    "CSV: n_elements,fov_deg,s,stderr,samples",
                    CommandKind::ArrayParam);
    add_common(ap, raws[ap], true, 1000);

    auto *ie = make("ineffectiveness",
                    "Probability that a path is ineffective (|alpha_h| < |X_h|) versus the number of paths M: "
                    "closed form (M-1)s/(1+(M-1)s) next to the simulated fraction. CSV: m,theory,empirical,stderr",
                    CommandKind::Ineffectiveness);
    add_common(ie, raws[ie], false, 1000);
    add_theory_s(ie, raws[ie]);
    add_sweep(ie, raws[ie], 15);
    ie->add_flag("--theory-only", raws[ie].cmd.theory_only, "Emit only the closed-form curve as m,value");

    auto *ec = make("effective-components",
                    "Mean number of effective paths versus M: closed form M/(1+(M-1)s) next to the simulated mean. "
                    "CSV: m,theory,empirical,stderr",
                    CommandKind::EffectiveComponents);
    add_common(ec, raws[ec], false, 1000);
    add_theory_s(ec, raws[ec]);
    add_sweep(ec, raws[ec], 15);
    ec->add_flag("--theory-only", raws[ec].cmd.theory_only, "Emit only the closed-form curve as m,value");

    auto *ss = make("snr-sweep",
                    "Band-averaged SNR of the MRC beam and of a single beam on the strongest path versus M, "
                    "closed form and simulation. CSV: m,mrc_theory_db,mrc_sim_db,single_theory_db,single_sim_db",
                    CommandKind::SnrSweep);
    add_common(ss, raws[ss], false, 1000);
    add_theory_s(ss, raws[ss]);
    add_sweep(ss, raws[ss], 20);
    ss->add_option("--harmonic", raws[ss].cmd.config.harmonic, "Peak-path power term: ln M + gamma, or exact H_M")
        ->transform(CLI::CheckedTransformer(std::map<std::string, HarmonicMode>{{"approx", HarmonicMode::ApproxLogGamma},
                                                                                {"exact", HarmonicMode::ExactHarmonic}},
                                            CLI::ignore_case))
        ->option_text("approx|exact [approx]");
    ss->add_flag("--theory-only", raws[ss].cmd.theory_only, "Emit only one closed-form curve as m,value");
    ss->add_option("--quantity", raws[ss].snr_quantity, "Curve for --theory-only")
        ->check(CLI::IsMember({"mrc", "single", "ratio"}))
        ->capture_default_str();

    auto *bc = make("blockage-cdf",
                    "Design both beams on a channel, remove one uniformly chosen path, and record the SNR of each "
                    "beam on the blocked channel. CSV: beam_kind,snr_db, one row per trial, ascending",
                    CommandKind::BlockageCdf);
    add_common(bc, raws[bc], false, 1000);
    raws[bc].m_paths = 20;
    bc->add_option("--m-paths", raws[bc].m_paths, "Number of paths (>= 2)")->capture_default_str();

    auto *bp = make("beam-pattern",
                    "Gain |F(theta)|^2 in dB of a beam over the array's broadside half-plane. The channel comes from "
                    "--channel-file, --example-alpha4, or is sampled. CSV: theta_deg,gain_db",
                    CommandKind::BeamPattern);
    add_common(bp, raws[bp], false, 1);
    raws[bp].m_paths = 4;
    bp->add_option("--m-paths", raws[bp].m_paths, "Paths of the sampled channel")->capture_default_str();
    bp->add_option("--channel-file", raws[bp].cmd.channel_file, "Channel JSON ({components:[...]} or {channels:[...]})");
    bp->add_option("--channel-index", raws[bp].cmd.channel_index, "Entry of a {channels:[...]} file")
        ->capture_default_str();
    bp->add_option("--example-alpha4", raws[bp].cmd.example_alpha4,
                   "Use the four-path example channel with this fourth amplitude");
    bp->add_option("--grid-deg", raws[bp].cmd.grid_deg, "Angular grid step in degrees")->capture_default_str();
    bp->add_option("--beam", raws[bp].cmd.beam, "Beam to evaluate")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, BeamKind>{{"mrc", BeamKind::Mrc}, {"single", BeamKind::SingleDirection}},
            CLI::ignore_case))
        ->option_text("mrc|single [mrc]");
    bp->add_option("--upa", raws[bp].upa, "Planar RxC half-wavelength array in the xy-plane instead of the ULA");
    bp->add_option("--dump-channel", raws[bp].cmd.dump_channel, "Also write the channel used as JSON to this path");

    auto *dc = make("dump-channel",
                    "Write sampled channels. Trial t uses the same stream as trial t of a sweep at the same M and "
                    "seed. JSON: {components:[{re,im,kx,ky,kz,delay_ns}]} (or {channels:[...]} for several)",
                    CommandKind::DumpChannel);
    add_common(dc, raws[dc], false, 1);
    raws[dc].m_paths = 4;
    dc->add_option("--m-paths", raws[dc].m_paths, "Number of paths")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &e)
    {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw UsageError(out.str(), 0);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw UsageError(out.str(), 0);
    }
    catch (const CLI::ParseError &e)
    {
        std::ostringstream out, err;
        app.exit(e, out, err);
        throw UsageError(err.str() + out.str(), 2);
    }

    CLI::App *selected = app.get_subcommands().front();
    Raw &raw = raws.at(selected);
    Command cmd = raw.cmd;
    try
    {
        cmd.config.bandwidth = parse_frequency(raw.bandwidth);
        cmd.config.delay_max = raw.delay_max_ns * 1e-9;
        switch (cmd.kind)
        {
        case CommandKind::Ineffectiveness:
            cmd.config.m_values = raw.sweep.values();
            cmd.quantity = TheoryQuantity::Pineff;
            break;
        case CommandKind::EffectiveComponents:
            cmd.config.m_values = raw.sweep.values();
            cmd.quantity = TheoryQuantity::Ceff;
            break;
        case CommandKind::SnrSweep:
            cmd.config.m_values = raw.sweep.values();
            cmd.quantity = raw.snr_quantity == "single" ? TheoryQuantity::SnrSingleDb
                           : raw.snr_quantity == "ratio" ? TheoryQuantity::SnrRatio
                                                         : TheoryQuantity::SnrMrcDb;
            break;
        case CommandKind::BlockageCdf:
            if (raw.m_paths < 2)
                throw std::invalid_argument("blockage-cdf needs --m-paths >= 2");
            cmd.config.m_values = {raw.m_paths};
            break;
        case CommandKind::BeamPattern:
        case CommandKind::DumpChannel:
            cmd.config.m_values = {raw.m_paths};
            break;
        case CommandKind::ArrayParam:
            break;
        }
        if (!raw.upa.empty())
        {
            char x = 0;
            std::istringstream is(raw.upa);
            if (!(is >> cmd.upa_rows >> x >> cmd.upa_cols) || (x != 'x' && x != 'X') || cmd.upa_rows == 0 ||
                cmd.upa_cols == 0)
                throw std::invalid_argument("--upa expects RxC, e.g. 3x3");
        }
        if (!(cmd.grid_deg > 0.0))
            throw std::invalid_argument("--grid-deg must be positive");
        if (cmd.array_param && !(*cmd.array_param >= 0.0 && *cmd.array_param <= 1.0))
            throw std::invalid_argument("--array-param must lie in [0, 1]");
        cmd.config.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw UsageError(std::string("error: ") + e.what() + "\nRun with --help for more information.\n", 2);
    }
    return cmd;
}

namespace
{

nlohmann::json document(const Command &cmd)
{
    return {{"command", to_string(cmd.kind)}, {"config", config_to_json(cmd.config)}, {"run", run_metadata()}};
}

nlohmann::json estimate_json(const ArrayParameterEstimate &est)
{
    return {{"s", est.s}, {"stderr", est.std_error}, {"samples", est.samples}};
}

// s for the theory columns: the override, or a Monte Carlo estimate.
ArrayParameterEstimate theory_parameter(const Command &cmd)
{
    if (cmd.array_param)
        return {*cmd.array_param, 0, 0.0};
    const auto &cfg = cmd.config;
    return estimate_array_parameter(cfg.array(), cfg.fov(), cfg.samples, cfg.seed, cfg.workers);
}

ChannelRealization load_channel(const std::string &path, std::size_t index)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open channel file: " + path);
    nlohmann::json j;
    try
    {
        f >> j;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::runtime_error("cannot parse channel file " + path + ": " + e.what());
    }
    if (j.is_object() && j.contains("channels"))
    {
        const auto &list = j.at("channels");
        if (!list.is_array() || index >= list.size())
            throw std::runtime_error("channel index out of range in " + path);
        return channel_from_json(list.at(index));
    }
    return channel_from_json(j);
}

Output run_array_param(const Command &cmd)
{
    const auto &cfg = cmd.config;
    const auto est = estimate_array_parameter(cfg.array(), cfg.fov(), cfg.samples, cfg.seed, cfg.workers);
    Output out{array_param_table(cfg.n_elements, cfg.fov_deg, est), document(cmd)};
    out.json["results"] = table_to_json(out.table);
    return out;
}

Output run_effectiveness(const Command &cmd)
{
    const auto &cfg = cmd.config;
    const auto est = theory_parameter(cmd);
    Output out{{}, document(cmd)};
    out.json["array_parameter"] = estimate_json(est);
    if (cmd.theory_only)
    {
        out.table = theory_table(theory_curve(cmd.quantity, cfg.m_values, cfg.n_elements, est.s, cfg.sigma0));
        out.json["quantity"] = to_string(cmd.quantity);
        out.json["results"] = table_to_json(out.table);
        return out;
    }
    const auto points = run_effectiveness_sweep(cfg);
    out.table = cmd.kind == CommandKind::Ineffectiveness ? ineffectiveness_table(points, est.s)
                                                         : effective_components_table(points, est.s);
    out.json["results"] = table_to_json(out.table);
    nlohmann::json detail = nlohmann::json::array();
    for (const auto &p : points)
        detail.push_back({{"m", p.m_paths},
                          {"trials", p.trials},
                          {"p_ineff", p.p_ineff.mean},
                          {"p_ineff_stderr", p.p_ineff.std_error},
                          {"eff_count_mean", p.eff_count.mean},
                          {"eff_count_stderr", p.eff_count.std_error},
                          {"eff_count_median", p.eff_count_median}});
    out.json["points"] = std::move(detail);
    return out;
}

Output run_snr(const Command &cmd)
{
    const auto &cfg = cmd.config;
    const auto est = theory_parameter(cmd);
    Output out{{}, document(cmd)};
    out.json["array_parameter"] = estimate_json(est);
    if (cmd.theory_only)
    {
        out.table =
            theory_table(theory_curve(cmd.quantity, cfg.m_values, cfg.n_elements, est.s, cfg.sigma0, cfg.harmonic));
        out.json["quantity"] = to_string(cmd.quantity);
        out.json["results"] = table_to_json(out.table);
        return out;
    }
    const auto points = run_snr_sweep(cfg);
    out.table = snr_table(points, cfg.n_elements, est.s, cfg.sigma0, cfg.harmonic);
    out.json["results"] = table_to_json(out.table);
    nlohmann::json detail = nlohmann::json::array();
    for (const auto &p : points)
        detail.push_back({{"m", p.m_paths},
                          {"trials", p.trials},
                          {"mrc_linear", p.mrc.mean},
                          {"mrc_linear_stderr", p.mrc.std_error},
                          {"single_linear", p.single.mean},
                          {"single_linear_stderr", p.single.std_error}});
    out.json["points"] = std::move(detail);
    return out;
}

Output run_blockage(const Command &cmd)
{
    const auto res = run_blockage_experiment(cmd.config);
    Output out{blockage_table(res), document(cmd)};
    nlohmann::json summary = nlohmann::json::object();
    for (const auto &[name, list] : {std::pair{"mrc", &res.mrc_db}, std::pair{"single", &res.single_db}})
        summary[name] = {{"p1_db", percentile(*list, 1.0)},
                         {"p5_db", percentile(*list, 5.0)},
                         {"p50_db", percentile(*list, 50.0)}};
    out.json["summary"] = std::move(summary);
    out.json["results"] = {{"mrc_db", res.mrc_db}, {"single_db", res.single_db}};
    return out;
}

Output run_pattern(const Command &cmd)
{
    const auto &cfg = cmd.config;
    const AntennaArray array = cmd.upa_rows ? make_upa(cmd.upa_cols, cmd.upa_rows, cfg.spacing_wavelengths)
                                            : cfg.array();
    ChannelRealization ch = [&] {
        if (!cmd.channel_file.empty())
            return load_channel(cmd.channel_file, cmd.channel_index);
        if (cmd.example_alpha4)
            return example_channel(*cmd.example_alpha4);
        Rng rng = trial_rng(cfg.seed, trial_index(cfg.m_values.front(), 0));
        return sample_channel(cfg.m_values.front(), cfg.fov(), cfg.delay_max, rng);
    }();
    const BeamWeights w = cmd.beam == BeamKind::Mrc
                              ? mrc_weights(ch, array)
                              : single_direction_weights(array, ch[strongest_component(ch)].direction);
    const auto pattern = beam_pattern(w, array, FieldOfView(std::numbers::pi / 2), cmd.grid_deg);
    Output out{pattern_table(pattern), document(cmd)};
    out.json["beam"] = to_string(cmd.beam);
    out.json["array_elements"] = array.size();
    out.json["channel"] = channel_to_json(ch);
    nlohmann::json eff = nlohmann::json::array();
    for (const auto &c : classify_effectiveness(ch, array).components)
        eff.push_back({{"amplitude", c.amplitude}, {"interference", c.interference}, {"effective", c.effective}});
    out.json["effectiveness"] = std::move(eff);
    out.json["results"] = table_to_json(out.table);
    if (!cmd.dump_channel.empty())
    {
        std::ofstream f(cmd.dump_channel, std::ios::binary | std::ios::trunc);
        f << channel_to_json(ch).dump(2) << "\n";
        if (!f)
            throw std::runtime_error("failed to write channel file: " + cmd.dump_channel);
    }
    return out;
}

Output run_dump(const Command &cmd)
{
    const auto &cfg = cmd.config;
    const std::size_t m_paths = cfg.m_values.front();
    std::vector<ChannelRealization> channels;
    for (std::size_t t = 0; t < cfg.trials; ++t)
    {
        Rng rng = trial_rng(cfg.seed, trial_index(m_paths, t));
        channels.push_back(sample_channel(m_paths, cfg.fov(), cfg.delay_max, rng));
    }
    Output out{channel_table(channels), document(cmd)};
    if (channels.size() == 1)
        out.json["components"] = channel_to_json(channels.front()).at("components");
    else
    {
        nlohmann::json list = nlohmann::json::array();
        for (const auto &c : channels)
            list.push_back(channel_to_json(c));
        out.json["channels"] = std::move(list);
    }
    return out;
}

} // namespace

Output execute(const Command &cmd)
{
    switch (cmd.kind)
    {
    case CommandKind::ArrayParam:
        return run_array_param(cmd);
    case CommandKind::Ineffectiveness:
    case CommandKind::EffectiveComponents:
        return run_effectiveness(cmd);
    case CommandKind::SnrSweep:
        return run_snr(cmd);
    case CommandKind::BlockageCdf:
        return run_blockage(cmd);
    case CommandKind::BeamPattern:
        return run_pattern(cmd);
    case CommandKind::DumpChannel:
        return run_dump(cmd);
    }
    throw std::logic_error("unhandled command");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Command cmd;
    try
    {
        cmd = parse_args(args);
    }
    catch (const UsageError &e)
    {
        (e.exit_code() == 0 ? out : err) << e.what();
        return e.exit_code();
    }
    try
    {
        write_output(execute(cmd), cmd.format, cmd.output, out);
    }
    catch (const std::exception &e)
    {
        err << "mrcbeam: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace mrcbeam
