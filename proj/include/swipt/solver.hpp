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

#include "swipt/channel.hpp"
#include "swipt/core_model.hpp"

#include <cstddef>
#include <string>

namespace swipt {

// Scenario scalars for the single-user robust design problem.
struct SystemConfig {
    std::size_t antennas = 4;
    double p_dbm = 10.41392685158225;  // P, so that P - P_circ = 10 dBm
    double p_circ_dbm = 0.0;
    NoiseModel noise{};
    double psi = 0.0;
    double theta_mw = 0.00027;
    double epsilon_mw = 0.2;
    EhCurve curve{};
    FadingParams fading{};
    // Vanished thresholds (theta = 0 or epsilon = 0) are raised to this value
    // so the split ratios stay inside the open unit interval.
    double threshold_floor_mw = 1e-12;

    // Throws Error(config) naming the offending field, or
    // Error(infeasible_target) when epsilon is at or above saturation.
    void validate() const;

    // P - P_circ in mW.
    double radiated_budget_mw() const;
};

inline constexpr double kFeasibilityGuard = 1e-12;

// sqrt(p) * h_hat / ||h_hat||: the principal eigenvector of h_hat h_hat^H
// scaled to the radiated budget.
ComplexVector optimal_beamformer(const ChannelEstimate &estimate, double p_mw);

// Worst-case received power under the optimal beamformer:
// (1 - sqrt(psi))^2 * p * ||h_hat||^2.
double gamma(const ChannelEstimate &estimate, double psi, double p_mw);

struct ClosedFormSplits {
    double rho = 0.0;  // (theta + eps_bar) / gamma, may be >= 1
    double phi = 0.0;  // eps_bar / (theta + eps_bar)
    bool feasible = false;
};

// Balance point of the two energy constraints. feasible is false when
// rho >= 1 - kFeasibilityGuard or phi falls outside (0,1).
ClosedFormSplits optimal_splits(double gamma_mw, double theta_mw, double epsilon_bar_mw);

// The smallest rho that serves both energy demands at a given phi:
// max{ theta / ((1 - phi) gamma), eps_bar / (phi gamma) }.
double required_rho(double phi, double gamma_mw, double theta_mw, double epsilon_bar_mw);

enum class Binding {
    none,        // feasible
    ac_supply,   // theta alone exceeds the worst-case received power
    dc_harvest,  // eps_bar alone exceeds it
    both,        // each alone exceeds it
    joint,       // each fits alone but not together
};

const char *to_string(Binding b);

struct WorstCaseMetrics {
    double rate_bpshz = 0.0;
    double sp_ac_mw = 0.0;
    double eh_dc_mw = 0.0;
};

struct Diagnostics {
    Binding binding = Binding::none;
    bool theta_clamped = false;
    bool epsilon_clamped = false;
    double rho_required = 0.0;  // unconstrained closed-form rho
    std::string message;
};

struct Solution {
    ComplexVector w;
    SplitPair splits{};  // meaningful only when feasible
    double gamma_mw = 0.0;
    double epsilon_bar_mw = 0.0;
    double theta_used_mw = 0.0;  // after the floor clamp
    bool feasible = false;
    WorstCaseMetrics metrics{};  // NaN when infeasible
    Diagnostics diagnostics{};
};

// Two-step closed-form solution: beamformer first, then the split ratios.
// Infeasible instances come back with feasible = false, never as an error.
Solution solve(const SystemConfig &config, const ChannelEstimate &estimate);

} // namespace swipt
