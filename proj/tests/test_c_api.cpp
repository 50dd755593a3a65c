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

// Exercises the shared library through its C header only.
#include "doctest.h"

#include "swipt/swipt.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string take(char *s)
{
    std::string out = s ? s : "";
    swipt_string_free(s);
    return out;
}

} // namespace

TEST_CASE("status strings and version")
{
    CHECK(std::string(swipt_version()) == "1.0.0");
    CHECK(std::string(swipt_status_string(SWIPT_OK)) == "ok");
    CHECK(std::string(swipt_status_string(SWIPT_ERR_CONFIG)).size() > 0);
}

TEST_CASE("model functions")
{
    double v = 0.0;
    REQUIRE(swipt_dbm_to_mw(10.0, &v) == SWIPT_OK);
    CHECK(v == doctest::Approx(10.0));
    CHECK(swipt_mw_to_dbm(0.0, &v) == SWIPT_ERR_DOMAIN);
    CHECK(swipt_rate(3.0, 0.5, 1.0, 1.0, &v) == SWIPT_OK);
    CHECK(v == doctest::Approx(1.0));
    CHECK(swipt_rate(3.0, 1.5, 1.0, 1.0, &v) == SWIPT_ERR_DOMAIN);
    CHECK(std::string(swipt_last_error()).find("rho") != std::string::npos);
    CHECK(swipt_ac_supply_power(10.0, 0.2, 0.3, &v) == SWIPT_OK);
    CHECK(v == doctest::Approx(1.4));
    CHECK(swipt_eh_dc(0.0022, 3.9, 1500.0, 0.0022, &v) == SWIPT_OK);
    CHECK(v == doctest::Approx(1.8780778235675820).epsilon(1e-13));
    CHECK(swipt_eh_dc_inverse(0.2, 3.9, 1500.0, 0.0022, &v) == SWIPT_OK);
    CHECK(v == doctest::Approx(6.1606732916451438e-4).epsilon(1e-12));
    CHECK(swipt_eh_dc_inverse(3.9, 3.9, 1500.0, 0.0022, &v) == SWIPT_ERR_INFEASIBLE_TARGET);
    CHECK(swipt_eh_dc(1.0, -3.9, 1500.0, 0.0022, &v) == SWIPT_ERR_DOMAIN);
    CHECK(swipt_rate(1.0, 0.5, 1.0, 1.0, nullptr) == SWIPT_ERR_NULL_ARGUMENT);
}

TEST_CASE("config handles")
{
    swipt_config *cfg = nullptr;
    REQUIRE(swipt_config_create_default(&cfg) == SWIPT_OK);
    CHECK(swipt_config_validate(cfg) == SWIPT_OK);

    double v = 0.0;
    CHECK(swipt_config_set(cfg, "psi", 0.05) == SWIPT_OK);
    CHECK(swipt_config_get(cfg, "psi", &v) == SWIPT_OK);
    CHECK(v == 0.05);
    CHECK(swipt_config_set(cfg, "bogus", 1.0) == SWIPT_ERR_CONFIG);
    CHECK(std::string(swipt_last_error()).find("bogus") != std::string::npos);
    CHECK(swipt_config_set_seed(cfg, 0xFFFFFFFFFFFFFFFFull) == SWIPT_OK);
    uint64_t seed = 0;
    CHECK(swipt_config_get_seed(cfg, &seed) == SWIPT_OK);
    CHECK(seed == 0xFFFFFFFFFFFFFFFFull);
    const double grid[] = {0.1, 0.2};
    CHECK(swipt_config_set_array(cfg, "experiments.epsilon_grid_mw", grid, 2) == SWIPT_OK);
    CHECK(swipt_config_set_array(cfg, "experiments.epsilon_grid_mw", nullptr, 2) == SWIPT_ERR_NULL_ARGUMENT);

    swipt_config *copy = nullptr;
    REQUIRE(swipt_config_clone(cfg, &copy) == SWIPT_OK);
    CHECK(swipt_config_set(copy, "p_circ_dbm", 30.0) == SWIPT_OK);
    CHECK(swipt_config_validate(copy) == SWIPT_ERR_CONFIG);
    CHECK(swipt_config_validate(cfg) == SWIPT_OK);

    char *json = nullptr;
    REQUIRE(swipt_config_to_json(cfg, &json) == SWIPT_OK);
    const std::string text = take(json);
    swipt_config *parsed = nullptr;
    REQUIRE(swipt_config_parse(text.c_str(), &parsed) == SWIPT_OK);
    CHECK(swipt_config_get(parsed, "psi", &v) == SWIPT_OK);
    CHECK(v == 0.05);

    swipt_config *bad = nullptr;
    CHECK(swipt_config_parse("{\"epsilon_mw\": 3.9}", &bad) == SWIPT_ERR_INFEASIBLE_TARGET);
    CHECK(bad == nullptr);
    CHECK(swipt_config_parse("{\"x\": 1}", &bad) == SWIPT_ERR_CONFIG);
    CHECK(swipt_config_load_file("/nonexistent.json", &bad) == SWIPT_ERR_IO);

    swipt_config_free(parsed);
    swipt_config_free(copy);
    swipt_config_free(cfg);
    swipt_config_free(nullptr);
}

TEST_CASE("solve through handles")
{
    swipt_config *cfg = nullptr;
    REQUIRE(swipt_config_create_default(&cfg) == SWIPT_OK);
    swipt_channel *ch = nullptr;
    REQUIRE(swipt_channel_sample(cfg, 1, 0, &ch) == SWIPT_OK);
    size_t m = 0;
    CHECK(swipt_channel_size(ch, &m) == SWIPT_OK);
    CHECK(m == 4);
    std::vector<double> h(2 * m);
    CHECK(swipt_channel_get(ch, h.data(), m) == SWIPT_OK);
    CHECK(swipt_channel_get(ch, h.data(), 3) == SWIPT_ERR_BUFFER_SIZE);

    swipt_channel *same = nullptr;
    REQUIRE(swipt_channel_from_interleaved(h.data(), m, &same) == SWIPT_OK);
    double n1 = 0.0, n2 = 0.0;
    swipt_channel_norm_sq(ch, &n1);
    swipt_channel_norm_sq(same, &n2);
    CHECK(n1 == n2);

    swipt_solution *sol = nullptr;
    REQUIRE(swipt_solve(cfg, ch, &sol) == SWIPT_OK);
    swipt_solution_info info{};
    REQUIRE(swipt_solution_get_info(sol, &info) == SWIPT_OK);
    CHECK(info.feasible == 1);
    CHECK(info.phi == doctest::Approx(0.69528274983957835).epsilon(1e-12));
    CHECK(info.binding == SWIPT_BINDING_NONE);
    CHECK(info.sp_ac_mw == doctest::Approx(0.00027).epsilon(1e-9));
    std::vector<double> w(2 * m);
    REQUIRE(swipt_solution_beamformer(sol, w.data(), m) == SWIPT_OK);
    double power = 0.0;
    for (double x : w)
        power += x * x;
    CHECK(power == doctest::Approx(10.0).epsilon(1e-9));
    char *json = nullptr;
    REQUIRE(swipt_solution_to_json(sol, &json) == SWIPT_OK);
    CHECK(take(json).find("\"feasible\": true") != std::string::npos);

    // infeasible is a result, not an error
    swipt_config_set(cfg, "theta_mw", 1000.0);
    swipt_solution *none = nullptr;
    REQUIRE(swipt_solve(cfg, ch, &none) == SWIPT_OK);
    swipt_solution_get_info(none, &info);
    CHECK(info.feasible == 0);
    CHECK(std::isnan(info.rho));
    CHECK(info.binding == SWIPT_BINDING_AC_SUPPLY);

    swipt_config_set(cfg, "antennas", 2.0);
    swipt_solution *mismatch = nullptr;
    CHECK(swipt_solve(cfg, ch, &mismatch) == SWIPT_ERR_DOMAIN);

    const double zeros[4] = {0, 0, 0, 0};
    swipt_channel *zero = nullptr;
    CHECK(swipt_channel_from_interleaved(zeros, 2, &zero) == SWIPT_ERR_DOMAIN);

    swipt_solution_free(none);
    swipt_solution_free(sol);
    swipt_channel_free(same);
    swipt_channel_free(ch);
    swipt_config_free(cfg);
}

TEST_CASE("sweeps and outputs")
{
    swipt_config *cfg = nullptr;
    REQUIRE(swipt_config_create_default(&cfg) == SWIPT_OK);
    swipt_config_set(cfg, "experiments.realizations", 40.0);
    const double grid[] = {0.01, 0.2};
    swipt_config_set_array(cfg, "experiments.epsilon_grid_mw", grid, 2);

    swipt_sweep *sw = nullptr;
    REQUIRE(swipt_sweep_run(cfg, SWIPT_SWEEP_REGION, &sw) == SWIPT_OK);
    size_t rows = 0;
    CHECK(swipt_sweep_row_count(sw, &rows) == SWIPT_OK);
    CHECK(rows == 4);
    swipt_sweep_row row{};
    REQUIRE(swipt_sweep_get_row(sw, 1, &row) == SWIPT_OK);
    CHECK(std::string(row.scenario) == "DC");
    CHECK(row.n_total == 40);
    CHECK(swipt_sweep_get_row(sw, 4, &row) == SWIPT_ERR_DOMAIN);

    const fs::path dir = fs::temp_directory_path() / "swipt_c_api_test";
    fs::remove_all(dir);
    char *manifest = nullptr;
    REQUIRE(swipt_sweep_write_outputs(sw, dir.c_str(), 0, &manifest) == SWIPT_OK);
    const std::string manifest_path = take(manifest);
    CHECK(fs::path(manifest_path).filename() == "region.manifest.json");
    char digest[65];
    REQUIRE(swipt_file_sha256((dir / "region.csv").c_str(), digest) == SWIPT_OK);
    std::ifstream in(manifest_path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find(digest) != std::string::npos);

    swipt_config *replay = nullptr;
    REQUIRE(swipt_config_load_file(manifest_path.c_str(), &replay) == SWIPT_OK);
    swipt_sweep *again = nullptr;
    REQUIRE(swipt_sweep_run(replay, SWIPT_SWEEP_REGION, &again) == SWIPT_OK);
    REQUIRE(swipt_sweep_write_csv(again, (dir / "again.csv").c_str()) == SWIPT_OK);
    char digest2[65];
    REQUIRE(swipt_file_sha256((dir / "again.csv").c_str(), digest2) == SWIPT_OK);
    CHECK(std::string(digest) == std::string(digest2));
    CHECK(swipt_sweep_write_csv(again, "/nonexistent/dir/x.csv") == SWIPT_ERR_IO);

    swipt_config_set(cfg, "experiments.realizations", 0.0);
    swipt_sweep *none = nullptr;
    CHECK(swipt_sweep_run(cfg, SWIPT_SWEEP_CSI, &none) == SWIPT_ERR_CONFIG);

    swipt_sweep_free(again);
    swipt_sweep_free(sw);
    swipt_config_free(replay);
    swipt_config_free(cfg);
}

TEST_CASE("validation report")
{
    swipt_config *cfg = nullptr;
    REQUIRE(swipt_config_create_default(&cfg) == SWIPT_OK);
    swipt_validate_options opt{SWIPT_LEVEL_FAST, 1, 0.0};
    swipt_report *rep = nullptr;
    REQUIRE(swipt_validate(cfg, &opt, &rep) == SWIPT_OK);
    int passed = 0;
    CHECK(swipt_report_passed(rep, &passed) == SWIPT_OK);
    CHECK(passed == 1);
    char *text = nullptr;
    REQUIRE(swipt_report_to_text(rep, &text) == SWIPT_OK);
    CHECK(take(text).find("balance_perturbation") != std::string::npos);
    swipt_report_free(rep);

    opt.phi_fault_rel = 0.01;
    REQUIRE(swipt_validate(cfg, &opt, &rep) == SWIPT_OK);
    swipt_report_passed(rep, &passed);
    CHECK(passed == 0);
    char *json = nullptr;
    REQUIRE(swipt_report_to_json(rep, &json) == SWIPT_OK);
    CHECK(take(json).find("\"passed\": false") != std::string::npos);
    swipt_report_free(rep);
    swipt_config_free(cfg);
}
