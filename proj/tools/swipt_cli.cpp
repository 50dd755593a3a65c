// SPDX-License-Identifier: Apache-2.0
//
// swipt-ac: robust SWIPT power-splitting receiver with AC computing
// Copyright (C) 2026 The swipt-ac authors
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

// swipt: command-line front end over the C API.
//
//   swipt solve     --config cfg.json [--seed N --index K | --channel h.json] [--json] [--out DIR]
//   swipt region    --config cfg.json [--seed N] [--realizations N] [--epsilon-grid a,b,...] [--out DIR] [--plot]
//   swipt csi-sweep --config cfg.json [--seed N] [--realizations N] [--p0-grid ...] [--psi-list ...] [--out DIR] [--plot]
//   swipt validate  --config cfg.json [--level fast|full] [--seed N] [--json]
//
// Exit codes: 0 success, 1 validation failure, 2 configuration or input
// error, 3 internal error.

#include "swipt/swipt.h"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct ConfigDeleter {
    void operator()(swipt_config *p) const { swipt_config_free(p); }
};
struct ChannelDeleter {
    void operator()(swipt_channel *p) const { swipt_channel_free(p); }
};
struct SolutionDeleter {
    void operator()(swipt_solution *p) const { swipt_solution_free(p); }
};
struct SweepDeleter {
    void operator()(swipt_sweep *p) const { swipt_sweep_free(p); }
};
struct ReportDeleter {
    void operator()(swipt_report *p) const { swipt_report_free(p); }
};
struct StringDeleter {
    void operator()(char *p) const { swipt_string_free(p); }
};

using ConfigPtr = std::unique_ptr<swipt_config, ConfigDeleter>;
using ChannelPtr = std::unique_ptr<swipt_channel, ChannelDeleter>;
using SolutionPtr = std::unique_ptr<swipt_solution, SolutionDeleter>;
using SweepPtr = std::unique_ptr<swipt_sweep, SweepDeleter>;
using ReportPtr = std::unique_ptr<swipt_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a C API failure out to main() with the exit code it maps to.
struct Failure {
    int exit_code;
    std::string message;
};

void check(swipt_status status, const std::string &context)
{
    if (status == SWIPT_OK)
        return;
    const int code = status == SWIPT_ERR_INTERNAL ? kExitInternal : kExitInput;
    throw Failure{code, context + " (" + swipt_status_string(status) + "): " + swipt_last_error()};
}

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> realizations;
    std::string out_dir = "out";
    bool plot = false;
};

ConfigPtr load_config(const CommonOptions &opts)
{
    swipt_config *raw = nullptr;
    if (opts.config_path.empty())
        check(swipt_config_create_default(&raw), "default config");
    else
        check(swipt_config_load_file(opts.config_path.c_str(), &raw), "config");
    ConfigPtr cfg(raw);
    if (opts.seed)
        check(swipt_config_set_seed(cfg.get(), *opts.seed), "--seed");
    if (opts.realizations)
        check(swipt_config_set(cfg.get(), "experiments.realizations", static_cast<double>(*opts.realizations)),
              "--realizations");
    return cfg;
}

void set_array(swipt_config *cfg, const char *key, const std::vector<double> &values, const std::string &flag)
{
    if (!values.empty())
        check(swipt_config_set_array(cfg, key, values.data(), values.size()), flag);
}

std::string fmt(double v, int precision = 6)
{
    if (std::isnan(v))
        return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

const char *binding_name(swipt_binding b)
{
    switch (b) {
    case SWIPT_BINDING_NONE: return "none";
    case SWIPT_BINDING_AC_SUPPLY: return "AC supply threshold alone exceeds the worst-case received power";
    case SWIPT_BINDING_DC_HARVEST: return "DC harvest requirement alone exceeds the worst-case received power";
    case SWIPT_BINDING_BOTH: return "both thresholds individually exceed the worst-case received power";
    case SWIPT_BINDING_JOINT: return "each threshold fits alone but not both together";
    }
    return "unknown";
}

int run_solve(const CommonOptions &common, std::uint64_t index, const std::string &channel_path, bool as_json,
              const std::string &record_dir)
{
    ConfigPtr cfg = load_config(common);
    check(swipt_config_validate(cfg.get()), "config");

    swipt_channel *raw_channel = nullptr;
    if (!channel_path.empty()) {
        check(swipt_channel_load_file(channel_path.c_str(), &raw_channel), "channel file");
    } else {
        std::uint64_t seed = 0;
        check(swipt_config_get_seed(cfg.get(), &seed), "seed");
        check(swipt_channel_sample(cfg.get(), seed, index, &raw_channel), "channel");
    }
    ChannelPtr channel(raw_channel);

    swipt_solution *raw_solution = nullptr;
    check(swipt_solve(cfg.get(), channel.get(), &raw_solution), "solve");
    SolutionPtr solution(raw_solution);

    swipt_solution_info info{};
    check(swipt_solution_get_info(solution.get(), &info), "solve");
    char *raw_json = nullptr;
    check(swipt_solution_to_json(solution.get(), &raw_json), "solve");
    StringPtr record(raw_json);

    if (as_json) {
        std::cout << record.get() << '\n';
    } else {
        std::size_t m = 0;
        check(swipt_channel_size(channel.get(), &m), "channel");
        std::vector<double> w(2 * m);
        check(swipt_solution_beamformer(solution.get(), w.data(), m), "solve");

        std::cout << "beamformer w* (per antenna):\n";
        for (std::size_t i = 0; i < m; ++i) {
            const double re = w[2 * i], im = w[2 * i + 1];
            std::cout << "  [" << i << "] |w| = " << fmt(std::hypot(re, im)) << " mW^0.5, phase = "
                      << fmt(std::atan2(im, re) * 180.0 / std::numbers::pi) << " deg\n";
        }
        std::cout << "gamma (worst-case received power) = " << fmt(info.gamma_mw) << " mW\n"
                  << "eps_bar (required pre-rectifier power) = " << fmt(info.epsilon_bar_mw) << " mW\n"
                  << "feasible = " << (info.feasible ? "yes" : "no") << '\n';
        if (info.feasible) {
            std::cout << "rho* = " << fmt(info.rho, 10) << "\nphi* = " << fmt(info.phi, 10) << '\n'
                      << "worst-case rate = " << fmt(info.rate_bpshz) << " bps/Hz\n"
                      << "worst-case SP_AC = " << fmt(info.sp_ac_mw) << " mW\n"
                      << "worst-case EH_DC = " << fmt(info.eh_dc_mw) << " mW\n";
        } else {
            std::cout << "required rho = " << fmt(info.rho_required) << " (must be < 1)\n"
                      << "binding: " << binding_name(info.binding) << '\n';
        }
        if (info.theta_clamped || info.epsilon_clamped)
            std::cout << "note: a zero threshold was raised to the configured floor\n";
    }

    if (!record_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(record_dir, ec);
        const auto path = std::filesystem::path(record_dir) / "solution.json";
        std::ofstream f(path);
        if (ec || !f)
            throw Failure{kExitInput, "output: cannot write '" + path.string() + "'"};
        f << record.get() << '\n';
        if (!f)
            throw Failure{kExitInput, "output: write failed for '" + path.string() + "'"};
        if (!as_json)
            std::cout << "record: " << path.string() << '\n';
    }
    return kExitOk;
}

int run_sweep(const CommonOptions &common, swipt_sweep_kind kind, const std::vector<double> &eps_grid,
              const std::vector<double> &p0_grid, const std::vector<double> &psi_list)
{
    ConfigPtr cfg = load_config(common);
    set_array(cfg.get(), "experiments.epsilon_grid_mw", eps_grid, "--epsilon-grid");
    set_array(cfg.get(), "experiments.p0_grid_dbm", p0_grid, "--p0-grid");
    set_array(cfg.get(), "experiments.psi_list", psi_list, "--psi-list");
    check(swipt_config_validate(cfg.get()), "config");

    swipt_sweep *raw = nullptr;
    check(swipt_sweep_run(cfg.get(), kind, &raw), "sweep");
    SweepPtr sweep(raw);

    char *manifest = nullptr;
    check(swipt_sweep_write_outputs(sweep.get(), common.out_dir.c_str(), common.plot ? 1 : 0, &manifest), "output");
    StringPtr manifest_path(manifest);

    std::size_t rows = 0;
    check(swipt_sweep_row_count(sweep.get(), &rows), "sweep");
    std::cout << "wrote " << rows << " rows; manifest: " << manifest_path.get() << '\n';
    return kExitOk;
}

int run_validate(const CommonOptions &common, const std::string &level, bool as_json)
{
    ConfigPtr cfg = load_config(common);
    check(swipt_config_validate(cfg.get()), "config");
    swipt_validate_options opts{};
    opts.level = level == "full" ? SWIPT_LEVEL_FULL : SWIPT_LEVEL_FAST;
    check(swipt_config_get_seed(cfg.get(), &opts.seed), "seed");

    swipt_report *raw = nullptr;
    check(swipt_validate(cfg.get(), &opts, &raw), "validate");
    ReportPtr report(raw);

    char *text = nullptr;
    check(as_json ? swipt_report_to_json(report.get(), &text) : swipt_report_to_text(report.get(), &text),
          "validate");
    StringPtr out(text);
    std::cout << out.get();
    if (as_json)
        std::cout << '\n';
    int passed = 0;
    check(swipt_report_passed(report.get(), &passed), "validate");
    return passed ? kExitOk : kExitValidationFailed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Robust SWIPT power-splitting design with AC computing"};
    app.set_version_flag("--version", std::string(swipt_version()));
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", common.config_path, "JSON configuration (or a run manifest)");
        sub->add_option("--seed", common.seed, "master seed (overrides experiments.seed)");
    };

    std::uint64_t index = 0;
    std::string channel_path;
    bool as_json = false;
    std::string solve_out;
    auto *solve = app.add_subcommand("solve", "closed-form solution for one channel");
    add_common(solve);
    solve->add_option("--index", index, "realization index within the seed's stream");
    solve->add_option("--channel", channel_path, "explicit channel file {\"h_hat\": [[re, im], ...]}");
    solve->add_flag("--json", as_json, "print the machine-readable record instead of text");
    solve->add_option("--out", solve_out, "also write <DIR>/solution.json");

    std::vector<double> eps_grid, p0_grid, psi_list;
    auto *region = app.add_subcommand("region", "rate-energy region sweep, AC vs DC computing");
    add_common(region);
    region->add_option("--realizations", common.realizations, "channel realizations per cell");
    region->add_option("--epsilon-grid", eps_grid, "comma-separated DC harvest targets (mW)")->delimiter(',');
    region->add_option("--out", common.out_dir, "output directory")->capture_default_str();
    region->add_flag("--plot", common.plot, "also render an SVG line chart");

    auto *csi = app.add_subcommand("csi-sweep", "rate vs radiated power for several CSI error factors");
    add_common(csi);
    csi->add_option("--realizations", common.realizations, "channel realizations per cell");
    csi->add_option("--p0-grid", p0_grid, "comma-separated radiated powers P - P_circ (dBm)")->delimiter(',');
    csi->add_option("--psi-list", psi_list, "comma-separated error factors in [0,1)")->delimiter(',');
    csi->add_option("--out", common.out_dir, "output directory")->capture_default_str();
    csi->add_flag("--plot", common.plot, "also render an SVG line chart");

    std::string level = "fast";
    auto *validate = app.add_subcommand("validate", "certify the closed form against brute-force oracles");
    add_common(validate);
    validate->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    validate->add_flag("--json", as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*solve) {
            return run_solve(common, index, channel_path, as_json, solve_out);
        }
        if (*region)
            return run_sweep(common, SWIPT_SWEEP_REGION, eps_grid, {}, {});
        if (*csi)
            return run_sweep(common, SWIPT_SWEEP_CSI, {}, p0_grid, psi_list);
        if (*validate)
            return run_validate(common, level, as_json);
    } catch (const Failure &f) {
        std::cerr << "swipt: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitInternal;
}
