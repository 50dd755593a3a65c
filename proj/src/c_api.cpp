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

#include "swipt/swipt.h"

#include "swipt/core_model.hpp"
#include "swipt/error.hpp"
#include "swipt/experiments.hpp"
#include "swipt/io.hpp"
#include "swipt/oracle.hpp"
#include "swipt/solver.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <optional>
#include <string>

struct swipt_config {
    swipt::RunConfig value;
};

struct swipt_channel {
    swipt::ChannelEstimate value;
};

struct swipt_solution {
    swipt::Solution value;
};

struct swipt_sweep {
    swipt::SweepResult value;
    swipt::RunConfig config;
};

struct swipt_report {
    swipt::oracle::ValidationReport value;
};

namespace {

thread_local std::string g_last_error;

swipt_status to_status(swipt::ErrorCode code)
{
    switch (code) {
    case swipt::ErrorCode::domain: return SWIPT_ERR_DOMAIN;
    case swipt::ErrorCode::infeasible_target: return SWIPT_ERR_INFEASIBLE_TARGET;
    case swipt::ErrorCode::config: return SWIPT_ERR_CONFIG;
    case swipt::ErrorCode::io: return SWIPT_ERR_IO;
    }
    return SWIPT_ERR_INTERNAL;
}

template <class F>
swipt_status guarded(F &&body) noexcept
{
    try {
        return body();
    } catch (const swipt::Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return SWIPT_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return SWIPT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SWIPT_ERR_INTERNAL;
    }
}

swipt_status null_argument(const char *what)
{
    g_last_error = std::string("null argument: ") + what;
    return SWIPT_ERR_NULL_ARGUMENT;
}

char *dup_string(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void export_vector(const swipt::ComplexVector &v, double *re_im)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        re_im[2 * i] = v[i].real();
        re_im[2 * i + 1] = v[i].imag();
    }
}

swipt_status size_mismatch(std::size_t expected, std::size_t given)
{
    g_last_error = "buffer holds " + std::to_string(given) + " antennas, need " + std::to_string(expected);
    return SWIPT_ERR_BUFFER_SIZE;
}

} // namespace

extern "C" {

const char *swipt_version(void) { return swipt::kToolVersion; }

const char *swipt_last_error(void) { return g_last_error.c_str(); }

const char *swipt_status_string(swipt_status status)
{
    switch (status) {
    case SWIPT_OK: return "ok";
    case SWIPT_ERR_NULL_ARGUMENT: return "null argument";
    case SWIPT_ERR_DOMAIN: return "domain error";
    case SWIPT_ERR_INFEASIBLE_TARGET: return "infeasible target";
    case SWIPT_ERR_CONFIG: return "configuration error";
    case SWIPT_ERR_IO: return "i/o error";
    case SWIPT_ERR_BUFFER_SIZE: return "buffer size mismatch";
    case SWIPT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void swipt_string_free(char *str) { std::free(str); }

swipt_status swipt_dbm_to_mw(double dbm, double *out_mw)
{
    if (out_mw == nullptr)
        return null_argument("out_mw");
    *out_mw = swipt::dbm_to_mw(dbm);
    return SWIPT_OK;
}

swipt_status swipt_mw_to_dbm(double mw, double *out_dbm)
{
    if (out_dbm == nullptr)
        return null_argument("out_dbm");
    return guarded([&] {
        if (!(mw > 0.0))
            swipt::throw_domain("mw_to_dbm: power must be > 0");
        *out_dbm = swipt::mw_to_dbm(mw);
        return SWIPT_OK;
    });
}

swipt_status swipt_rate(double gain_mw, double rho, double sigma0_sq_mw, double sigma1_sq_mw, double *out_bpshz)
{
    if (out_bpshz == nullptr)
        return null_argument("out_bpshz");
    return guarded([&] {
        const swipt::NoiseModel noise{sigma0_sq_mw, sigma1_sq_mw};
        noise.validate();
        *out_bpshz = swipt::rate(gain_mw, rho, noise);
        return SWIPT_OK;
    });
}

swipt_status swipt_ac_supply_power(double gain_mw, double rho, double phi, double *out_mw)
{
    if (out_mw == nullptr)
        return null_argument("out_mw");
    return guarded([&] {
        *out_mw = swipt::ac_supply_power(gain_mw, {rho, phi});
        return SWIPT_OK;
    });
}

swipt_status swipt_eh_dc(double input_mw, double m_eh_mw, double a_per_mw, double b_mw, double *out_mw)
{
    if (out_mw == nullptr)
        return null_argument("out_mw");
    return guarded([&] {
        const swipt::EhCurve curve{m_eh_mw, a_per_mw, b_mw};
        curve.validate();
        *out_mw = swipt::eh_dc(input_mw, curve);
        return SWIPT_OK;
    });
}

swipt_status swipt_eh_dc_inverse(double target_mw, double m_eh_mw, double a_per_mw, double b_mw, double *out_mw)
{
    if (out_mw == nullptr)
        return null_argument("out_mw");
    return guarded([&] {
        const swipt::EhCurve curve{m_eh_mw, a_per_mw, b_mw};
        curve.validate();
        *out_mw = swipt::eh_dc_inverse(target_mw, curve);
        return SWIPT_OK;
    });
}

swipt_status swipt_config_create_default(swipt_config **out)
{
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_config{};
        return SWIPT_OK;
    });
}

swipt_status swipt_config_load_file(const char *path, swipt_config **out)
{
    if (path == nullptr)
        return null_argument("path");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_config{swipt::load_run_config(path)};
        return SWIPT_OK;
    });
}

swipt_status swipt_config_parse(const char *json_text, swipt_config **out)
{
    if (json_text == nullptr)
        return null_argument("json_text");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_config{swipt::parse_run_config(json_text)};
        return SWIPT_OK;
    });
}

swipt_status swipt_config_clone(const swipt_config *config, swipt_config **out)
{
    if (config == nullptr)
        return null_argument("config");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_config{*config};
        return SWIPT_OK;
    });
}

void swipt_config_free(swipt_config *config) { delete config; }

swipt_status swipt_config_validate(const swipt_config *config)
{
    if (config == nullptr)
        return null_argument("config");
    return guarded([&] {
        config->value.system.validate();
        config->value.experiments.validate();
        return SWIPT_OK;
    });
}

swipt_status swipt_config_set(swipt_config *config, const char *key, double value)
{
    if (config == nullptr)
        return null_argument("config");
    if (key == nullptr)
        return null_argument("key");
    return guarded([&] {
        swipt::set_config_value(config->value, key, value);
        return SWIPT_OK;
    });
}

swipt_status swipt_config_get(const swipt_config *config, const char *key, double *out)
{
    if (config == nullptr)
        return null_argument("config");
    if (key == nullptr)
        return null_argument("key");
    if (out == nullptr)
        return null_argument("out");
    return guarded([&] {
        *out = swipt::get_config_value(config->value, key);
        return SWIPT_OK;
    });
}

swipt_status swipt_config_set_seed(swipt_config *config, uint64_t seed)
{
    if (config == nullptr)
        return null_argument("config");
    config->value.experiments.seed = seed;
    return SWIPT_OK;
}

swipt_status swipt_config_get_seed(const swipt_config *config, uint64_t *out)
{
    if (config == nullptr)
        return null_argument("config");
    if (out == nullptr)
        return null_argument("out");
    *out = config->value.experiments.seed;
    return SWIPT_OK;
}

swipt_status swipt_config_set_array(swipt_config *config, const char *key, const double *values, size_t count)
{
    if (config == nullptr)
        return null_argument("config");
    if (key == nullptr)
        return null_argument("key");
    if (values == nullptr && count > 0)
        return null_argument("values");
    return guarded([&] {
        swipt::set_config_array(config->value, key, std::vector<double>(values, values + count));
        return SWIPT_OK;
    });
}

swipt_status swipt_config_to_json(const swipt_config *config, char **out_json)
{
    if (config == nullptr)
        return null_argument("config");
    if (out_json == nullptr)
        return null_argument("out_json");
    return guarded([&] {
        *out_json = dup_string(swipt::to_json(config->value));
        return SWIPT_OK;
    });
}

swipt_status swipt_channel_sample(const swipt_config *config, uint64_t seed, uint64_t index, swipt_channel **out)
{
    if (config == nullptr)
        return null_argument("config");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_channel{swipt::draw_channel(config->value.system, seed, index)};
        return SWIPT_OK;
    });
}

swipt_status swipt_channel_from_interleaved(const double *re_im, size_t antennas, swipt_channel **out)
{
    if (re_im == nullptr)
        return null_argument("re_im");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        swipt::ComplexVector h(antennas);
        for (std::size_t i = 0; i < antennas; ++i)
            h[i] = {re_im[2 * i], re_im[2 * i + 1]};
        *out = new swipt_channel{swipt::ChannelEstimate(std::move(h))};
        return SWIPT_OK;
    });
}

swipt_status swipt_channel_load_file(const char *path, swipt_channel **out)
{
    if (path == nullptr)
        return null_argument("path");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_channel{swipt::load_channel_file(path)};
        return SWIPT_OK;
    });
}

void swipt_channel_free(swipt_channel *channel) { delete channel; }

swipt_status swipt_channel_size(const swipt_channel *channel, size_t *out_antennas)
{
    if (channel == nullptr)
        return null_argument("channel");
    if (out_antennas == nullptr)
        return null_argument("out_antennas");
    *out_antennas = channel->value.size();
    return SWIPT_OK;
}

swipt_status swipt_channel_norm_sq(const swipt_channel *channel, double *out)
{
    if (channel == nullptr)
        return null_argument("channel");
    if (out == nullptr)
        return null_argument("out");
    *out = channel->value.norm_sq();
    return SWIPT_OK;
}

swipt_status swipt_channel_get(const swipt_channel *channel, double *re_im, size_t antennas)
{
    if (channel == nullptr)
        return null_argument("channel");
    if (re_im == nullptr)
        return null_argument("re_im");
    const auto h = channel->value.h_hat();
    if (antennas != h.size())
        return size_mismatch(h.size(), antennas);
    export_vector(swipt::ComplexVector(h.begin(), h.end()), re_im);
    return SWIPT_OK;
}

swipt_status swipt_solve(const swipt_config *config, const swipt_channel *channel, swipt_solution **out)
{
    if (config == nullptr)
        return null_argument("config");
    if (channel == nullptr)
        return null_argument("channel");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        *out = new swipt_solution{swipt::solve(config->value.system, channel->value)};
        return SWIPT_OK;
    });
}

void swipt_solution_free(swipt_solution *solution) { delete solution; }

swipt_status swipt_solution_get_info(const swipt_solution *solution, swipt_solution_info *out)
{
    if (solution == nullptr)
        return null_argument("solution");
    if (out == nullptr)
        return null_argument("out");
    const swipt::Solution &s = solution->value;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out->feasible = s.feasible ? 1 : 0;
    out->rho = s.feasible ? s.splits.rho : nan;
    out->phi = s.feasible ? s.splits.phi : nan;
    out->gamma_mw = s.gamma_mw;
    out->epsilon_bar_mw = s.epsilon_bar_mw;
    out->theta_used_mw = s.theta_used_mw;
    out->rate_bpshz = s.metrics.rate_bpshz;
    out->sp_ac_mw = s.metrics.sp_ac_mw;
    out->eh_dc_mw = s.metrics.eh_dc_mw;
    out->rho_required = s.diagnostics.rho_required;
    out->binding = static_cast<swipt_binding>(s.diagnostics.binding);
    out->theta_clamped = s.diagnostics.theta_clamped ? 1 : 0;
    out->epsilon_clamped = s.diagnostics.epsilon_clamped ? 1 : 0;
    return SWIPT_OK;
}

swipt_status swipt_solution_beamformer(const swipt_solution *solution, double *re_im, size_t antennas)
{
    if (solution == nullptr)
        return null_argument("solution");
    if (re_im == nullptr)
        return null_argument("re_im");
    if (antennas != solution->value.w.size())
        return size_mismatch(solution->value.w.size(), antennas);
    export_vector(solution->value.w, re_im);
    return SWIPT_OK;
}

swipt_status swipt_solution_to_json(const swipt_solution *solution, char **out_json)
{
    if (solution == nullptr)
        return null_argument("solution");
    if (out_json == nullptr)
        return null_argument("out_json");
    return guarded([&] {
        *out_json = dup_string(swipt::solution_to_json(solution->value));
        return SWIPT_OK;
    });
}

swipt_status swipt_sweep_run(const swipt_config *config, swipt_sweep_kind kind, swipt_sweep **out)
{
    if (config == nullptr)
        return null_argument("config");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const auto &cfg = config->value;
        swipt::SweepResult result;
        if (kind == SWIPT_SWEEP_REGION)
            result = swipt::rate_energy_region(cfg.system, cfg.experiments);
        else if (kind == SWIPT_SWEEP_CSI)
            result = swipt::csi_impact_sweep(cfg.system, cfg.experiments);
        else
            swipt::throw_domain("unknown sweep kind");
        *out = new swipt_sweep{std::move(result), cfg};
        return SWIPT_OK;
    });
}

void swipt_sweep_free(swipt_sweep *sweep) { delete sweep; }

swipt_status swipt_sweep_row_count(const swipt_sweep *sweep, size_t *out)
{
    if (sweep == nullptr)
        return null_argument("sweep");
    if (out == nullptr)
        return null_argument("out");
    *out = sweep->value.rows.size();
    return SWIPT_OK;
}

swipt_status swipt_sweep_get_row(const swipt_sweep *sweep, size_t index, swipt_sweep_row *out)
{
    if (sweep == nullptr)
        return null_argument("sweep");
    if (out == nullptr)
        return null_argument("out");
    if (index >= sweep->value.rows.size()) {
        g_last_error = "row index out of range";
        return SWIPT_ERR_DOMAIN;
    }
    const auto &row = sweep->value.rows[index];
    out->axis = row.axis;
    out->psi = row.psi;
    out->theta_mw = row.theta_mw;
    out->mean_rate_bpshz = row.stats.mean_rate_bpshz;
    out->stderr_rate = row.stats.stderr_rate;
    out->mean_eh_mw = row.stats.mean_eh_mw;
    out->feasible_frac = row.stats.feasible_frac();
    out->n_feasible = row.stats.n_feasible;
    out->n_total = row.stats.n_total;
    std::memset(out->scenario, 0, sizeof(out->scenario));
    std::strncpy(out->scenario, row.scenario.c_str(), sizeof(out->scenario) - 1);
    return SWIPT_OK;
}

swipt_status swipt_sweep_write_csv(const swipt_sweep *sweep, const char *path)
{
    if (sweep == nullptr)
        return null_argument("sweep");
    if (path == nullptr)
        return null_argument("path");
    return guarded([&] {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            swipt::throw_io(std::string("cannot write '") + path + "'");
        swipt::write_sweep_csv(sweep->value, f);
        f.flush();
        if (!f)
            swipt::throw_io(std::string("write failed for '") + path + "'");
        return SWIPT_OK;
    });
}

swipt_status swipt_sweep_write_outputs(const swipt_sweep *sweep, const char *out_dir, int plot,
                                       char **out_manifest_path)
{
    if (sweep == nullptr)
        return null_argument("sweep");
    if (out_dir == nullptr)
        return null_argument("out_dir");
    return guarded([&] {
        const char *command = sweep->value.kind == swipt::SweepKind::region ? "region" : "csi-sweep";
        const auto written = swipt::write_run_outputs(sweep->config, command, sweep->value, out_dir, plot != 0);
        if (out_manifest_path != nullptr)
            *out_manifest_path = dup_string(written.manifest.string());
        return SWIPT_OK;
    });
}

swipt_status swipt_validate(const swipt_config *config, const swipt_validate_options *options, swipt_report **out)
{
    if (config == nullptr)
        return null_argument("config");
    if (out == nullptr)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        swipt::oracle::ValidationOptions opts;
        if (options != nullptr) {
            opts.level = options->level == SWIPT_LEVEL_FULL ? swipt::oracle::Level::full : swipt::oracle::Level::fast;
            opts.seed = options->seed;
            opts.phi_fault_rel = options->phi_fault_rel;
        }
        *out = new swipt_report{swipt::oracle::run_validation(config->value.system, opts)};
        return SWIPT_OK;
    });
}

void swipt_report_free(swipt_report *report) { delete report; }

swipt_status swipt_report_passed(const swipt_report *report, int *out_passed)
{
    if (report == nullptr)
        return null_argument("report");
    if (out_passed == nullptr)
        return null_argument("out_passed");
    *out_passed = report->value.passed() ? 1 : 0;
    return SWIPT_OK;
}

swipt_status swipt_report_to_text(const swipt_report *report, char **out_text)
{
    if (report == nullptr)
        return null_argument("report");
    if (out_text == nullptr)
        return null_argument("out_text");
    return guarded([&] {
        *out_text = dup_string(report->value.to_text());
        return SWIPT_OK;
    });
}

swipt_status swipt_report_to_json(const swipt_report *report, char **out_json)
{
    if (report == nullptr)
        return null_argument("report");
    if (out_json == nullptr)
        return null_argument("out_json");
    return guarded([&] {
        *out_json = dup_string(report->value.to_json());
        return SWIPT_OK;
    });
}

swipt_status swipt_file_sha256(const char *path, char out[65])
{
    if (path == nullptr)
        return null_argument("path");
    if (out == nullptr)
        return null_argument("out");
    return guarded([&] {
        const std::string digest = swipt::sha256_file(path);
        std::memcpy(out, digest.c_str(), 65);
        return SWIPT_OK;
    });
}

} // extern "C"
