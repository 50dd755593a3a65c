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

// Brute-force certification of the closed-form solver. The grid search never
// calls the closed-form splits or the closed-form harvest inverse; it shares
// only the forward model (rate, AC supply, harvest curve) and the beamformer,
// which the split search takes as given.

#include "swipt/channel.hpp"
#include "swipt/random.hpp"
#include "swipt/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace swipt::oracle {

struct GridSpec {
    std::size_t resolution = 1000;
    double rho_lo = 1e-6;
    double rho_hi = 1.0 - 1e-6;
    double phi_lo = 1e-6;
    double phi_hi = 1.0 - 1e-6;

    void validate() const;
    double rho_step() const { return (rho_hi - rho_lo) / static_cast<double>(resolution - 1); }
    double phi_step() const { return (phi_hi - phi_lo) / static_cast<double>(resolution - 1); }
    double rho_at(std::size_t i) const { return rho_lo + static_cast<double>(i) * rho_step(); }
    double phi_at(std::size_t j) const { return phi_lo + static_cast<double>(j) * phi_step(); }
};

struct GridResult {
    bool found = false;
    double rho = 0.0;
    double phi = 0.0;
    double rate_bpshz = 0.0;
    std::size_t rho_index = 0;
    std::size_t phi_index = 0;
    std::size_t feasible_points = 0;
    double gamma_mw = 0.0;
};

// Pre-rectifier power for a harvest target by bisection on eh_dc.
double eh_dc_inverse_bisection(double target_mw, const EhCurve &curve, double tol_mw = 1e-15);

// Exhaustive search over the (rho, phi) grid with the optimal beamformer.
// A point is feasible when its worst-case AC supply reaches theta and its
// worst-case harvest reaches epsilon. Ties in rate go to the smaller
// required rho (most constraint slack), then to the lowest flat index.
GridResult grid_search_splits(const SystemConfig &config, const ChannelEstimate &estimate,
                              const GridSpec &grid = {});

struct GridEquivalence {
    GridResult grid;
    double closed_rate_bpshz = 0.0;
    double excess_bpshz = 0.0;       // grid rate - closed-form rate
    double deficit_bpshz = 0.0;      // closed-form rate - grid rate
    double deficit_tolerance = 0.0;  // Lipschitz bound * 2 rho steps
    double rho_offset_steps = 0.0;
    double phi_offset_steps = 0.0;
    double ac_shortfall_rel = 0.0;   // (theta - SP_AC) / theta at the closed-form point
    double dc_shortfall_rel = 0.0;   // (epsilon - EH_DC) / epsilon at the closed-form point
    bool feasibility_agrees = false;
    bool passed = false;
    std::string detail;
};

inline constexpr double kRateExcessTolerance = 1e-12;
inline constexpr double kMaxStepOffset = 2.0;
inline constexpr double kTightnessTolerance = 1e-9;

// Upper bound on |dR/drho| over [rho_lo, rho_hi] at received power gamma.
double rate_lipschitz_bound(double gamma_mw, double rho_lo, double rho_hi, const NoiseModel &noise);

// Cross-checks a solver output against the grid oracle.
GridEquivalence check_grid_equivalence(const SystemConfig &config, const ChannelEstimate &estimate,
                                       const Solution &solution, const GridSpec &grid = {});

struct BallCheck {
    double min_sampled_gain_mw = 0.0;
    double minimizer_gain_mw = 0.0;  // at e = -sqrt(psi) h_hat
    double ball_bound_mw = 0.0;
    double scaled_bound_mw = 0.0;
    std::size_t samples = 0;
};

// Minimum of |(h_hat + e)^H w|^2 over n errors drawn uniformly from the ball
// ||e||^2 <= psi ||h_hat||^2 (uniform direction in 2M real dimensions,
// radius R u^(1/2M)).
BallCheck sampled_worst_case_check(const ChannelEstimate &estimate, std::span<const Complex> w, double psi,
                                   std::size_t n, RandomStream &rng);

struct BeamformerCheck {
    double max_sampled_gain_mw = 0.0;
    double closed_gain_mw = 0.0;  // p ||h_hat||^2
    double achieved_gain_mw = 0.0;  // |h_hat^H w*|^2
};

// Compares the optimal beamformer against n random unit directions scaled
// to the same budget.
BeamformerCheck beamformer_optimality_check(const ChannelEstimate &estimate, double p_mw, std::size_t n,
                                            RandomStream &rng);

struct PerturbationEntry {
    double delta = 0.0;
    double objective_up = 0.0;
    double objective_down = 0.0;
    double margin_up = 0.0;
    double margin_down = 0.0;
    bool passed = false;
};

struct PerturbationReport {
    double phi_star = 0.0;
    double baseline = 0.0;  // (theta + eps_bar) / gamma
    std::vector<PerturbationEntry> entries;
    bool passed = false;
};

// Moves phi away from the balance point in both directions and checks that
// the larger of the two energy-constraint rho requirements strictly grows.
// Throws a domain error when phi* +/- delta leaves (0,1) or delta <= 0.
PerturbationReport perturbation_test_balance(double gamma_mw, double theta_mw, double epsilon_bar_mw,
                                            std::span<const double> deltas);

enum class Level { fast, full };

struct ValidationOptions {
    Level level = Level::fast;
    std::uint64_t seed = 1;
    // Relative error injected into phi* before the grid comparison. Zero in
    // normal runs; used to show the suite catches a wrong split formula.
    double phi_fault_rel = 0.0;
};

struct CheckResult {
    std::string name;
    std::string tolerance;
    double observed = 0.0;  // worst observed margin; <= 0 is good unless noted
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

struct RandomInstance {
    SystemConfig config;
    ChannelEstimate estimate;
};

// Random feasible problem instance built around `base`: radiated power,
// error factor, and both thresholds are drawn at random, and draws are
// rejected until the closed form is strictly inside the grid.
RandomInstance random_feasible_instance(const SystemConfig &base, RandomStream &rng, const GridSpec &grid = {});

ValidationReport run_validation(const SystemConfig &config, const ValidationOptions &options);

} // namespace swipt::oracle
