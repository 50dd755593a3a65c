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

// Monte Carlo sweeps over channel realizations. Every cell of a sweep is
// evaluated on the same channel draws, so comparisons between cells hold per
// realization and not only on average.

#include "swipt/channel.hpp"
#include "swipt/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace swipt {

struct ExperimentSettings {
    double theta_ac_mw = 0.00027;
    double theta_dc_mw = 0.04764;
    std::vector<double> epsilon_grid_mw = log_spaced(1e-3, 3.5, 40);
    std::vector<double> p0_grid_dbm = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    std::vector<double> psi_list = {0.0, 0.01, 0.05, 0.1};
    std::size_t realizations = 10000;
    std::uint64_t seed = 1;
    // Count infeasible realizations as zero rate instead of dropping them.
    bool infeasible_as_zero = false;

    static std::vector<double> log_spaced(double lo, double hi, std::size_t count);
    void validate() const;
};

enum class SweepKind { region, csi };

struct CellStats {
    std::size_t n_total = 0;
    std::size_t n_feasible = 0;
    double mean_rate_bpshz = 0.0;  // NaN when no realization contributes
    double stderr_rate = 0.0;      // NaN with fewer than two contributions
    double mean_eh_mw = 0.0;       // over feasible realizations; NaN if none
    double feasible_frac() const;
};

struct SweepRow {
    double axis = 0.0;  // epsilon (mW) for the region sweep, P0 (dBm) for the CSI sweep
    std::string scenario;
    double psi = 0.0;
    double theta_mw = 0.0;
    CellStats stats;
};

struct SweepResult {
    SweepKind kind = SweepKind::region;
    std::vector<SweepRow> rows;
    std::size_t realizations = 0;
    std::uint64_t seed = 0;
};

// Channel draw for realization `index`: depends only on (seed, index).
ChannelEstimate draw_channel(const SystemConfig &config, std::uint64_t seed, std::uint64_t index);

std::vector<ChannelEstimate> draw_channels(const SystemConfig &config, std::size_t n, std::uint64_t seed);

// Worst-case rate per realization; NaN where infeasible.
std::vector<double> realization_rates(const SystemConfig &config, std::span<const ChannelEstimate> channels);

// Sum with a fixed pairwise reduction tree, independent of how the work is
// partitioned.
double pairwise_sum(std::span<const double> values);

CellStats summarize(const SystemConfig &config, std::span<const ChannelEstimate> channels, bool infeasible_as_zero);

// Sets P so that P - P_circ equals `p0_dbm`, keeping P_circ.
SystemConfig with_radiated_budget_dbm(SystemConfig config, double p0_dbm);

// For each epsilon, one row per computing scenario ("AC" then "DC").
SweepResult rate_energy_region(const SystemConfig &config, const ExperimentSettings &settings);

// One row per (P0, psi) cell, P0-major.
SweepResult csi_impact_sweep(const SystemConfig &config, const ExperimentSettings &settings);

} // namespace swipt
