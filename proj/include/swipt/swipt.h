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

/*
 * C interface to the swipt library: robust single-user SWIPT design for a
 * power-splitting receiver that feeds an AC computing block.
 *
 * Conventions:
 *   - Every function returns a swipt_status; results come back through out
 *     parameters. On failure swipt_last_error() describes what went wrong
 *     (per thread, valid until the next failing call on that thread).
 *   - Objects are opaque handles created by *_create / *_load / *_run style
 *     functions and released by the matching *_free. Free functions accept
 *     NULL.
 *   - Strings returned through char** are heap allocated; release them with
 *     swipt_string_free.
 *   - Complex vectors are exchanged as interleaved doubles: re0, im0, re1, ...
 *   - Powers are linear mW unless the name ends in _dbm.
 */
#ifndef SWIPT_SWIPT_H
#define SWIPT_SWIPT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SWIPT_BUILDING_LIBRARY)
#define SWIPT_API __declspec(dllexport)
#else
#define SWIPT_API __declspec(dllimport)
#endif
#else
#define SWIPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swipt_status {
    SWIPT_OK = 0,
    SWIPT_ERR_NULL_ARGUMENT = 1,
    SWIPT_ERR_DOMAIN = 2,
    SWIPT_ERR_INFEASIBLE_TARGET = 3,
    SWIPT_ERR_CONFIG = 4,
    SWIPT_ERR_IO = 5,
    SWIPT_ERR_BUFFER_SIZE = 6,
    SWIPT_ERR_INTERNAL = 7
} swipt_status;

typedef enum swipt_binding {
    SWIPT_BINDING_NONE = 0,
    SWIPT_BINDING_AC_SUPPLY = 1,
    SWIPT_BINDING_DC_HARVEST = 2,
    SWIPT_BINDING_BOTH = 3,
    SWIPT_BINDING_JOINT = 4
} swipt_binding;

typedef enum swipt_sweep_kind {
    SWIPT_SWEEP_REGION = 0, /* rate vs. DC harvest target, AC and DC computing */
    SWIPT_SWEEP_CSI = 1     /* rate vs. radiated power for each error factor */
} swipt_sweep_kind;

typedef enum swipt_level { SWIPT_LEVEL_FAST = 0, SWIPT_LEVEL_FULL = 1 } swipt_level;

typedef struct swipt_config swipt_config;
typedef struct swipt_channel swipt_channel;
typedef struct swipt_solution swipt_solution;
typedef struct swipt_sweep swipt_sweep;
typedef struct swipt_report swipt_report;

SWIPT_API const char *swipt_version(void);
SWIPT_API const char *swipt_last_error(void);
SWIPT_API const char *swipt_status_string(swipt_status status);
SWIPT_API void swipt_string_free(char *str);

/* ---- link model ------------------------------------------------------- */

SWIPT_API swipt_status swipt_dbm_to_mw(double dbm, double *out_mw);
SWIPT_API swipt_status swipt_mw_to_dbm(double mw, double *out_dbm);
SWIPT_API swipt_status swipt_rate(double gain_mw, double rho, double sigma0_sq_mw, double sigma1_sq_mw,
                                  double *out_bpshz);
SWIPT_API swipt_status swipt_ac_supply_power(double gain_mw, double rho, double phi, double *out_mw);
SWIPT_API swipt_status swipt_eh_dc(double input_mw, double m_eh_mw, double a_per_mw, double b_mw, double *out_mw);
SWIPT_API swipt_status swipt_eh_dc_inverse(double target_mw, double m_eh_mw, double a_per_mw, double b_mw,
                                           double *out_mw);

/* ---- configuration ---------------------------------------------------- */

SWIPT_API swipt_status swipt_config_create_default(swipt_config **out);
SWIPT_API swipt_status swipt_config_load_file(const char *path, swipt_config **out);
SWIPT_API swipt_status swipt_config_parse(const char *json_text, swipt_config **out);
SWIPT_API swipt_status swipt_config_clone(const swipt_config *config, swipt_config **out);
SWIPT_API void swipt_config_free(swipt_config *config);
SWIPT_API swipt_status swipt_config_validate(const swipt_config *config);

/* Dotted keys as in the JSON schema, e.g. "psi", "fading.distance_m",
 * "experiments.realizations". "sigma0_sq_dbm"/"sigma1_sq_dbm" convert. */
SWIPT_API swipt_status swipt_config_set(swipt_config *config, const char *key, double value);
SWIPT_API swipt_status swipt_config_get(const swipt_config *config, const char *key, double *out);
SWIPT_API swipt_status swipt_config_set_seed(swipt_config *config, uint64_t seed);
SWIPT_API swipt_status swipt_config_get_seed(const swipt_config *config, uint64_t *out);
/* "experiments.epsilon_grid_mw", "experiments.p0_grid_dbm", "experiments.psi_list" */
SWIPT_API swipt_status swipt_config_set_array(swipt_config *config, const char *key, const double *values,
                                              size_t count);
SWIPT_API swipt_status swipt_config_to_json(const swipt_config *config, char **out_json);

/* ---- channels --------------------------------------------------------- */

/* Realization `index` of the stream keyed by `seed`. */
SWIPT_API swipt_status swipt_channel_sample(const swipt_config *config, uint64_t seed, uint64_t index,
                                            swipt_channel **out);
SWIPT_API swipt_status swipt_channel_from_interleaved(const double *re_im, size_t antennas, swipt_channel **out);
/* JSON file: {"h_hat": [[re, im], ...]} */
SWIPT_API swipt_status swipt_channel_load_file(const char *path, swipt_channel **out);
SWIPT_API void swipt_channel_free(swipt_channel *channel);
SWIPT_API swipt_status swipt_channel_size(const swipt_channel *channel, size_t *out_antennas);
SWIPT_API swipt_status swipt_channel_norm_sq(const swipt_channel *channel, double *out);
SWIPT_API swipt_status swipt_channel_get(const swipt_channel *channel, double *re_im, size_t antennas);

/* ---- solver ----------------------------------------------------------- */

typedef struct swipt_solution_info {
    int feasible;
    double rho;             /* NaN when infeasible */
    double phi;             /* NaN when infeasible */
    double gamma_mw;        /* worst-case received power */
    double epsilon_bar_mw;  /* pre-rectifier power for the DC target */
    double theta_used_mw;   /* AC threshold after the floor clamp */
    double rate_bpshz;      /* worst-case metrics, NaN when infeasible */
    double sp_ac_mw;
    double eh_dc_mw;
    double rho_required;    /* unconstrained closed-form rho */
    swipt_binding binding;
    int theta_clamped;
    int epsilon_clamped;
} swipt_solution_info;

/* Infeasible instances are not an error: check info.feasible. */
SWIPT_API swipt_status swipt_solve(const swipt_config *config, const swipt_channel *channel, swipt_solution **out);
SWIPT_API void swipt_solution_free(swipt_solution *solution);
SWIPT_API swipt_status swipt_solution_get_info(const swipt_solution *solution, swipt_solution_info *out);
SWIPT_API swipt_status swipt_solution_beamformer(const swipt_solution *solution, double *re_im, size_t antennas);
SWIPT_API swipt_status swipt_solution_to_json(const swipt_solution *solution, char **out_json);

/* ---- experiments ------------------------------------------------------ */

typedef struct swipt_sweep_row {
    double axis;             /* epsilon (mW) or P0 (dBm) */
    double psi;
    double theta_mw;
    double mean_rate_bpshz;  /* NaN when absent */
    double stderr_rate;      /* NaN when absent */
    double mean_eh_mw;       /* NaN when absent */
    double feasible_frac;
    size_t n_feasible;
    size_t n_total;
    char scenario[32];
} swipt_sweep_row;

/* Grids, realizations and seed come from the config's experiments section. */
SWIPT_API swipt_status swipt_sweep_run(const swipt_config *config, swipt_sweep_kind kind, swipt_sweep **out);
SWIPT_API void swipt_sweep_free(swipt_sweep *sweep);
SWIPT_API swipt_status swipt_sweep_row_count(const swipt_sweep *sweep, size_t *out);
SWIPT_API swipt_status swipt_sweep_get_row(const swipt_sweep *sweep, size_t index, swipt_sweep_row *out);
SWIPT_API swipt_status swipt_sweep_write_csv(const swipt_sweep *sweep, const char *path);
/* Writes <stem>.csv (+ <stem>.svg when plot != 0) and <stem>.manifest.json
 * into out_dir; stem is "region" or "csi_sweep". out_manifest_path may be
 * NULL. */
SWIPT_API swipt_status swipt_sweep_write_outputs(const swipt_sweep *sweep, const char *out_dir, int plot,
                                                 char **out_manifest_path);

/* ---- validation ------------------------------------------------------- */

typedef struct swipt_validate_options {
    swipt_level level;
    uint64_t seed;
    double phi_fault_rel; /* 0 in normal use; fault injection for self-tests */
} swipt_validate_options;

SWIPT_API swipt_status swipt_validate(const swipt_config *config, const swipt_validate_options *options,
                                      swipt_report **out);
SWIPT_API void swipt_report_free(swipt_report *report);
SWIPT_API swipt_status swipt_report_passed(const swipt_report *report, int *out_passed);
SWIPT_API swipt_status swipt_report_to_text(const swipt_report *report, char **out_text);
SWIPT_API swipt_status swipt_report_to_json(const swipt_report *report, char **out_json);

/* ---- misc ------------------------------------------------------------- */

/* Lowercase hex SHA-256 of a file; out must hold 65 bytes. */
SWIPT_API swipt_status swipt_file_sha256(const char *path, char out[65]);

#ifdef __cplusplus
}
#endif

#endif /* SWIPT_SWIPT_H */
