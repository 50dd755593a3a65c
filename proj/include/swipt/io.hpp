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

#pragma once

// File formats: JSON run configuration (also accepted in the form of a run
// manifest), JSON channel files, CSV sweep tables, the run manifest and a
// small SVG line plot.

#include "swipt/channel.hpp"
#include "swipt/experiments.hpp"
#include "swipt/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace swipt {

inline constexpr const char *kToolVersion = "1.0.0";

struct RunConfig {
    SystemConfig system;
    ExperimentSettings experiments;
};

// Parses a configuration document. Unknown keys, wrong types and invalid
// values raise Error(config) naming the field. A run manifest is accepted
// too; its "config" member is used.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path &path);

// Full snapshot with every field spelled out; parse_run_config of the
// result reproduces the input bit-exactly.
std::string to_json(const RunConfig &config, int indent = 2);

// Dotted-key scalar access used by the C API ("psi", "fading.distance_m",
// "experiments.seed", ...).
void set_config_value(RunConfig &config, std::string_view key, double value);
double get_config_value(const RunConfig &config, std::string_view key);
void set_config_array(RunConfig &config, std::string_view key, std::vector<double> values);

// {"h_hat": [[re, im], ...]}
ChannelEstimate parse_channel(std::string_view json_text);
ChannelEstimate load_channel_file(const std::filesystem::path &path);

std::string solution_to_json(const Solution &solution, int indent = 2);

void write_sweep_csv(const SweepResult &result, std::ostream &out);

// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path &path);

struct OutputFile {
    std::string name;
    std::string sha256;
};

std::string manifest_json(const RunConfig &config, std::string_view command, const std::vector<OutputFile> &outputs);

// Line chart of mean rate against the sweep axis, one line per scenario.
void write_sweep_svg(const SweepResult &result, std::ostream &out);

struct WrittenRun {
    std::filesystem::path csv;
    std::filesystem::path manifest;
    std::filesystem::path plot;  // empty unless requested
};

// Writes <stem>.csv, optionally <stem>.svg, and <stem>.manifest.json into
// `out_dir` (created if missing).
WrittenRun write_run_outputs(const RunConfig &config, std::string_view command, const SweepResult &result,
                             const std::filesystem::path &out_dir, bool plot);

} // namespace swipt
