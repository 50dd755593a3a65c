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

#include "swipt/solver.hpp"

#include "swipt/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swipt {

namespace {

void require(bool ok, const std::string &field, const std::string &what)
{
    if (!ok)
        throw_config("config field '" + field + "': " + what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

void SystemConfig::validate() const
{
    require(antennas >= 1, "antennas", "must be >= 1");
    require(finite(p_dbm), "p_dbm", "must be finite");
    require(finite(p_circ_dbm), "p_circ_dbm", "must be finite");
    require(dbm_to_mw(p_dbm) > dbm_to_mw(p_circ_dbm), "p_dbm",
            "transmit budget P must exceed circuit power P_circ (no radiated power left)");
    require(finite(noise.sigma0_sq_mw) && noise.sigma0_sq_mw > 0.0, "sigma0_sq", "must be > 0");
    require(finite(noise.sigma1_sq_mw) && noise.sigma1_sq_mw > 0.0, "sigma1_sq", "must be > 0");
    require(psi >= 0.0 && psi < 1.0, "psi", "must lie in [0,1)");
    require(finite(theta_mw) && theta_mw >= 0.0, "theta_mw", "must be >= 0");
    require(finite(curve.m_eh_mw) && curve.m_eh_mw > 0.0, "eh_curve.m_eh_mw", "must be > 0");
    require(finite(curve.a_per_mw) && curve.a_per_mw > 0.0, "eh_curve.a_per_mw", "must be > 0");
    require(finite(curve.b_mw) && curve.b_mw > 0.0, "eh_curve.b_mw", "must be > 0");
    require(finite(epsilon_mw) && epsilon_mw >= 0.0, "epsilon_mw", "must be >= 0");
    if (epsilon_mw >= curve.m_eh_mw)
        throw Error(ErrorCode::infeasible_target,
                    "config field 'epsilon_mw': DC harvest target " + std::to_string(epsilon_mw) +
                        " mW is at or above the harvester saturation level " +
                        std::to_string(curve.m_eh_mw) + " mW; no transmit power can reach it");
    require(finite(fading.distance_m) && fading.distance_m > 0.0, "fading.distance_m", "must be > 0");
    require(finite(fading.pathloss_exponent) && fading.pathloss_exponent > 0.0,
            "fading.pathloss_exponent", "must be > 0");
    require(!std::isnan(fading.rician_k_db), "fading.rician_k_db", "must be a number");
    require(finite(threshold_floor_mw) && threshold_floor_mw > 0.0, "threshold_floor_mw", "must be > 0");
}

double SystemConfig::radiated_budget_mw() const { return dbm_to_mw(p_dbm) - dbm_to_mw(p_circ_dbm); }

ComplexVector optimal_beamformer(const ChannelEstimate &estimate, double p_mw)
{
    if (!(p_mw > 0.0))
        throw_domain("optimal_beamformer: radiated budget must be > 0");
    const double scale = std::sqrt(p_mw) / estimate.norm();
    ComplexVector w(estimate.h_hat().begin(), estimate.h_hat().end());
    for (auto &x : w)
        x *= scale;
    return w;
}

double gamma(const ChannelEstimate &estimate, double psi, double p_mw)
{
    validate_error_factor(psi);
    if (!(p_mw > 0.0))
        throw_domain("gamma: radiated budget must be > 0");
    const double margin = 1.0 - std::sqrt(psi);
    return margin * margin * p_mw * estimate.norm_sq();
}

ClosedFormSplits optimal_splits(double gamma_mw, double theta_mw, double epsilon_bar_mw)
{
    if (!(gamma_mw > 0.0))
        throw_domain("optimal_splits: gamma must be > 0");
    if (!(theta_mw > 0.0) || !(epsilon_bar_mw > 0.0))
        throw_domain("optimal_splits: thresholds must be > 0 (clamp vanished thresholds first)");
    ClosedFormSplits out;
    const double total = theta_mw + epsilon_bar_mw;
    out.phi = epsilon_bar_mw / total;
    out.rho = total / gamma_mw;
    out.feasible = out.rho < 1.0 - kFeasibilityGuard && out.phi > 0.0 && out.phi < 1.0;
    return out;
}

double required_rho(double phi, double gamma_mw, double theta_mw, double epsilon_bar_mw)
{
    return std::max(theta_mw / ((1.0 - phi) * gamma_mw), epsilon_bar_mw / (phi * gamma_mw));
}

const char *to_string(Binding b)
{
    switch (b) {
    case Binding::none: return "none";
    case Binding::ac_supply: return "ac_supply";
    case Binding::dc_harvest: return "dc_harvest";
    case Binding::both: return "both";
    case Binding::joint: return "joint";
    }
    return "unknown";
}

Solution solve(const SystemConfig &config, const ChannelEstimate &estimate)
{
    config.validate();
    if (estimate.size() != config.antennas)
        throw_domain("solve: channel has " + std::to_string(estimate.size()) + " entries but config has " +
                     std::to_string(config.antennas) + " antennas");

    Solution sol;
    Diagnostics &diag = sol.diagnostics;

    double eps_bar = eh_dc_inverse(config.epsilon_mw, config.curve);
    if (eps_bar < config.threshold_floor_mw) {
        eps_bar = config.threshold_floor_mw;
        diag.epsilon_clamped = true;
    }
    double theta = config.theta_mw;
    if (theta < config.threshold_floor_mw) {
        theta = config.threshold_floor_mw;
        diag.theta_clamped = true;
    }

    const double p_mw = config.radiated_budget_mw();
    sol.w = optimal_beamformer(estimate, p_mw);
    sol.gamma_mw = gamma(estimate, config.psi, p_mw);
    sol.epsilon_bar_mw = eps_bar;
    sol.theta_used_mw = theta;

    const ClosedFormSplits splits = optimal_splits(sol.gamma_mw, theta, eps_bar);
    diag.rho_required = splits.rho;
    sol.feasible = splits.feasible;

    if (!sol.feasible) {
        const double limit = sol.gamma_mw * (1.0 - kFeasibilityGuard);
        const bool ac = theta >= limit;
        const bool dc = eps_bar >= limit;
        diag.binding = ac && dc ? Binding::both : ac ? Binding::ac_supply : dc ? Binding::dc_harvest : Binding::joint;
        diag.message = "infeasible: required rho = " + std::to_string(splits.rho) +
                       " (theta + eps_bar = " + std::to_string(theta + eps_bar) +
                       " mW exceeds worst-case received power " + std::to_string(sol.gamma_mw) +
                       " mW); binding = " + to_string(diag.binding);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        sol.metrics = {nan, nan, nan};
        return sol;
    }

    sol.splits = {splits.rho, splits.phi};
    sol.metrics.rate_bpshz = rate(sol.gamma_mw, splits.rho, config.noise);
    sol.metrics.sp_ac_mw = ac_supply_power(sol.gamma_mw, sol.splits);
    sol.metrics.eh_dc_mw = eh_dc(splits.rho * splits.phi * sol.gamma_mw, config.curve);
    if (diag.theta_clamped || diag.epsilon_clamped)
        diag.message = "vanished threshold raised to the floor of " + std::to_string(config.threshold_floor_mw) + " mW";
    return sol;
}

} // namespace swipt
