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

#include "swipt/oracle.hpp"

#include "swipt/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace swipt::oracle {

void GridSpec::validate() const
{
    if (resolution < 2)
        throw_domain("grid resolution must be >= 2");
    if (!(rho_lo > 0.0 && rho_lo < rho_hi && rho_hi < 1.0))
        throw_domain("grid rho range must lie strictly inside (0,1)");
    if (!(phi_lo > 0.0 && phi_lo < phi_hi && phi_hi < 1.0))
        throw_domain("grid phi range must lie strictly inside (0,1)");
}

double eh_dc_inverse_bisection(double target_mw, const EhCurve &curve, double tol_mw)
{
    if (!(target_mw >= 0.0))
        throw_domain("bisection inverse: target must be >= 0");
    if (target_mw >= curve.m_eh_mw)
        throw Error(ErrorCode::infeasible_target, "bisection inverse: target at or above saturation");
    if (target_mw == 0.0)
        return 0.0;
    double lo = 0.0;
    double hi = curve.b_mw;
    while (eh_dc(hi, curve) < target_mw)
        hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > tol_mw; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eh_dc(mid, curve) < target_mw)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

struct EffectiveThresholds {
    double theta_mw;
    double epsilon_mw;      // harvest target actually enforced
    double epsilon_bar_mw;  // by bisection
};

EffectiveThresholds effective_thresholds(const SystemConfig &config)
{
    EffectiveThresholds t{};
    t.theta_mw = std::max(config.theta_mw, config.threshold_floor_mw);
    t.epsilon_bar_mw = eh_dc_inverse_bisection(config.epsilon_mw, config.curve);
    t.epsilon_mw = config.epsilon_mw;
    if (t.epsilon_bar_mw < config.threshold_floor_mw) {
        t.epsilon_bar_mw = config.threshold_floor_mw;
        t.epsilon_mw = eh_dc(config.threshold_floor_mw, config.curve);
    }
    return t;
}

double split_objective(double phi, double gamma_mw, double theta_mw, double epsilon_bar_mw)
{
    const double ac_branch = theta_mw / ((1.0 - phi) * gamma_mw);
    const double dc_branch = epsilon_bar_mw / (phi * gamma_mw);
    return ac_branch > dc_branch ? ac_branch : dc_branch;
}

double worst_case_beamformer_gain(const SystemConfig &config, const ChannelEstimate &estimate)
{
    const auto w = optimal_beamformer(estimate, config.radiated_budget_mw());
    return worst_case_gain_ball(estimate, w, config.psi);
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

} // namespace

GridResult grid_search_splits(const SystemConfig &config, const ChannelEstimate &estimate, const GridSpec &grid)
{
    config.validate();
    grid.validate();

    GridResult best;
    best.gamma_mw = worst_case_beamformer_gain(config, estimate);
    const double g = best.gamma_mw;
    if (!(g > 0.0))
        return best;
    const EffectiveThresholds t = effective_thresholds(config);

    const std::size_t n = grid.resolution;
    std::vector<double> rates(n), required(n);
    for (std::size_t i = 0; i < n; ++i)
        rates[i] = rate(g, grid.rho_at(i), config.noise);
    for (std::size_t j = 0; j < n; ++j)
        required[j] = split_objective(grid.phi_at(j), g, t.theta_mw, t.epsilon_bar_mw);

    double best_required = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = grid.rho_at(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double phi = grid.phi_at(j);
            if (rho * (1.0 - phi) * g < t.theta_mw)
                continue;
            if (eh_dc(rho * phi * g, config.curve) < t.epsilon_mw)
                continue;
            ++best.feasible_points;
            const bool better = !best.found || rates[i] > best.rate_bpshz ||
                                (rates[i] == best.rate_bpshz && required[j] < best_required);
            if (better) {
                best.found = true;
                best.rho = rho;
                best.phi = phi;
                best.rate_bpshz = rates[i];
                best.rho_index = i;
                best.phi_index = j;
                best_required = required[j];
            }
        }
    }
    return best;
}

double rate_lipschitz_bound(double gamma_mw, double rho_lo, double rho_hi, const NoiseModel &noise)
{
    const double d_lo = noise.sigma0_sq_mw + noise.sigma1_sq_mw / (1.0 - rho_lo);
    const double one_minus_hi = 1.0 - rho_hi;
    return gamma_mw * noise.sigma1_sq_mw / (std::numbers::ln2 * one_minus_hi * one_minus_hi * d_lo * d_lo);
}

GridEquivalence check_grid_equivalence(const SystemConfig &config, const ChannelEstimate &estimate,
                                       const Solution &solution, const GridSpec &grid)
{
    GridEquivalence out;
    out.grid = grid_search_splits(config, estimate, grid);
    out.feasibility_agrees = out.grid.found == solution.feasible;
    if (!out.feasibility_agrees) {
        out.detail = solution.feasible ? "closed form feasible but no grid point is"
                                       : "grid found a feasible point but the closed form reports infeasible";
        return out;
    }
    if (!solution.feasible) {
        out.passed = true;
        out.detail = "both infeasible";
        return out;
    }

    const double g = out.grid.gamma_mw;
    const EffectiveThresholds t = effective_thresholds(config);
    const double rho = solution.splits.rho;
    const double phi = solution.splits.phi;
    const double step = grid.rho_step();

    out.closed_rate_bpshz = rate(g, rho, config.noise);
    out.excess_bpshz = out.grid.rate_bpshz - out.closed_rate_bpshz;
    out.deficit_bpshz = -out.excess_bpshz;
    const double rho_hi = std::min(rho + kMaxStepOffset * step, grid.rho_hi);
    out.deficit_tolerance = rate_lipschitz_bound(g, rho, rho_hi, config.noise) * kMaxStepOffset * step;
    out.rho_offset_steps = std::abs(out.grid.rho - rho) / step;
    out.phi_offset_steps = std::abs(out.grid.phi - phi) / grid.phi_step();
    out.ac_shortfall_rel = (t.theta_mw - rho * (1.0 - phi) * g) / t.theta_mw;
    out.dc_shortfall_rel = (t.epsilon_mw - eh_dc(rho * phi * g, config.curve)) / t.epsilon_mw;

    std::vector<std::string> failures;
    if (out.excess_bpshz > kRateExcessTolerance)
        failures.push_back("grid beats closed form by " + fmt(out.excess_bpshz));
    if (out.deficit_bpshz > out.deficit_tolerance)
        failures.push_back("closed form trails grid by " + fmt(out.deficit_bpshz));
    if (out.rho_offset_steps > kMaxStepOffset)
        failures.push_back("rho off by " + fmt(out.rho_offset_steps) + " steps");
    if (out.phi_offset_steps > kMaxStepOffset)
        failures.push_back("phi off by " + fmt(out.phi_offset_steps) + " steps");
    if (out.ac_shortfall_rel > kTightnessTolerance)
        failures.push_back("AC supply short by " + fmt(out.ac_shortfall_rel) + " (relative)");
    if (out.dc_shortfall_rel > kTightnessTolerance)
        failures.push_back("DC harvest short by " + fmt(out.dc_shortfall_rel) + " (relative)");
    out.passed = failures.empty();
    for (const auto &f : failures)
        out.detail += (out.detail.empty() ? "" : "; ") + f;
    return out;
}

BallCheck sampled_worst_case_check(const ChannelEstimate &estimate, std::span<const Complex> w, double psi,
                                   std::size_t n, RandomStream &rng)
{
    if (n == 0)
        throw_domain("sampled_worst_case_check: need at least one sample");
    validate_error_factor(psi);

    BallCheck out;
    out.samples = n;
    out.ball_bound_mw = worst_case_gain_ball(estimate, w, psi);
    out.scaled_bound_mw = worst_case_gain_scaled(estimate, w, psi);

    const std::size_t m = estimate.size();
    const double radius = std::sqrt(psi) * estimate.norm();
    const double dims = 2.0 * static_cast<double>(m);
    const Complex nominal = inner(estimate.h_hat(), w);

    ComplexVector direction(m);
    double min_gain = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n; ++s) {
        for (auto &d : direction)
            d = rng.complex_normal();
        const double r = radius * std::pow(rng.uniform(), 1.0 / dims);
        const double scale = r / std::sqrt(norm_sq(direction));
        const Complex perturbation = scale * inner(direction, w);
        min_gain = std::min(min_gain, std::norm(nominal + perturbation));
    }
    out.min_sampled_gain_mw = min_gain;

    const auto e = worst_case_error(estimate, psi);
    ComplexVector actual(estimate.h_hat().begin(), estimate.h_hat().end());
    for (std::size_t i = 0; i < m; ++i)
        actual[i] += e[i];
    out.minimizer_gain_mw = std::norm(inner(actual, w));
    return out;
}

BeamformerCheck beamformer_optimality_check(const ChannelEstimate &estimate, double p_mw, std::size_t n,
                                            RandomStream &rng)
{
    BeamformerCheck out;
    out.closed_gain_mw = p_mw * estimate.norm_sq();
    const auto w = optimal_beamformer(estimate, p_mw);
    out.achieved_gain_mw = std::norm(inner(estimate.h_hat(), w));

    ComplexVector u(estimate.size());
    const double amp = std::sqrt(p_mw);
    for (std::size_t s = 0; s < n; ++s) {
        for (auto &x : u)
            x = rng.complex_normal();
        const double scale = amp / std::sqrt(norm_sq(u));
        out.max_sampled_gain_mw = std::max(out.max_sampled_gain_mw, std::norm(scale * inner(estimate.h_hat(), u)));
    }
    return out;
}

PerturbationReport perturbation_test_balance(double gamma_mw, double theta_mw, double epsilon_bar_mw,
                                            std::span<const double> deltas)
{
    if (!(gamma_mw > 0.0 && theta_mw > 0.0 && epsilon_bar_mw > 0.0))
        throw_domain("perturbation test: gamma, theta and eps_bar must be > 0");
    PerturbationReport out;
    out.phi_star = epsilon_bar_mw / (theta_mw + epsilon_bar_mw);
    out.baseline = (theta_mw + epsilon_bar_mw) / gamma_mw;
    out.passed = true;
    for (double delta : deltas) {
        if (!(delta > 0.0) || !(out.phi_star + delta < 1.0) || !(out.phi_star - delta > 0.0))
            throw_domain("perturbation test: delta " + fmt(delta) + " leaves phi outside (0,1)");
        PerturbationEntry e;
        e.delta = delta;
        e.objective_up = split_objective(out.phi_star + delta, gamma_mw, theta_mw, epsilon_bar_mw);
        e.objective_down = split_objective(out.phi_star - delta, gamma_mw, theta_mw, epsilon_bar_mw);
        e.margin_up = e.objective_up - out.baseline;
        e.margin_down = e.objective_down - out.baseline;
        e.passed = e.margin_up > 0.0 && e.margin_down > 0.0;
        out.passed = out.passed && e.passed;
        out.entries.push_back(e);
    }
    return out;
}

RandomInstance random_feasible_instance(const SystemConfig &base, RandomStream &rng, const GridSpec &grid)
{
    const double max_rho = 1.0 - 3.0 * grid.rho_step();
    const double p_circ_mw = dbm_to_mw(base.p_circ_dbm);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        SystemConfig cfg = base;
        const double p0_dbm = -20.0 + 40.0 * rng.uniform();
        cfg.p_dbm = mw_to_dbm(dbm_to_mw(p0_dbm) + p_circ_mw);
        cfg.psi = 0.2 * rng.uniform();
        cfg.theta_mw = std::pow(10.0, -5.0 + 4.0 * rng.uniform());
        const double eps_hi = std::min(3.8, 0.999 * cfg.curve.m_eh_mw);
        cfg.epsilon_mw = 1e-4 * std::pow(eps_hi / 1e-4, rng.uniform());
        ChannelEstimate est = sample_channel(cfg.fading, cfg.antennas, rng);

        const Solution sol = solve(cfg, est);
        if (!sol.feasible || sol.splits.rho > max_rho)
            continue;
        if (sol.splits.phi < grid.phi_lo || sol.splits.phi > grid.phi_hi)
            continue;
        return {cfg, std::move(est)};
    }
    throw_domain("could not draw a feasible random instance around this configuration");
}

bool ValidationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string ValidationReport::to_text() const
{
    std::ostringstream os;
    for (const auto &c : checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  tol: " << c.tolerance
           << "  observed: " << fmt(c.observed);
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << '\n';
    }
    os << (passed() ? "all checks passed" : "validation FAILED") << '\n';
    return os.str();
}

std::string ValidationReport::to_json() const
{
    nlohmann::json j;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"tolerance", c.tolerance},
                               {"observed", c.observed},
                               {"passed", c.passed},
                               {"detail", c.detail}});
    return j.dump(2);
}

namespace {

struct Budget {
    std::size_t round_trip_points;
    std::size_t grid_instances;
    std::size_t samples;
    std::size_t balance_triples;
};

Budget budget_for(Level level)
{
    if (level == Level::full)
        return {1000, 200, 100000, 100};
    return {200, 10, 10000, 20};
}

CheckResult check_round_trip(const EhCurve &curve, std::size_t points)
{
    CheckResult c;
    c.name = "eh_inverse_round_trip";
    c.tolerance = "|eh(inv(eps)) - eps| <= 1e-9*M_eh; |closed - bisection| <= 1e-10 mW";
    const double lo = 1e-4;
    const double hi = std::min(3.8, 0.999 * curve.m_eh_mw);
    double worst_round_trip = 0.0, worst_gap = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        const double frac = points == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(points - 1);
        const double eps = lo * std::pow(hi / lo, frac);
        const double inv = eh_dc_inverse(eps, curve);
        worst_round_trip = std::max(worst_round_trip, std::abs(eh_dc(inv, curve) - eps));
        worst_gap = std::max(worst_gap, std::abs(inv - eh_dc_inverse_bisection(eps, curve)));
    }
    c.observed = std::max(worst_round_trip / (1e-9 * curve.m_eh_mw), worst_gap / 1e-10);
    c.passed = worst_round_trip <= 1e-9 * curve.m_eh_mw && worst_gap <= 1e-10;
    c.detail = "worst round trip " + fmt(worst_round_trip) + " mW, worst bisection gap " + fmt(worst_gap) +
               " mW (observed = worst ratio to tolerance)";
    return c;
}

} // namespace

ValidationReport run_validation(const SystemConfig &config, const ValidationOptions &options)
{
    config.validate();
    const Budget budget = budget_for(options.level);
    const GridSpec grid{};
    ValidationReport report;

    report.checks.push_back(check_round_trip(config.curve, budget.round_trip_points));

    // The configured scenario itself, on the first channel of the seed.
    {
        RandomStream rng(options.seed, 0);
        const ChannelEstimate est = sample_channel(config.fading, config.antennas, rng);
        Solution sol = solve(config, est);
        sol.splits.phi *= 1.0 + options.phi_fault_rel;
        const auto eq = check_grid_equivalence(config, est, sol, grid);
        CheckResult c;
        c.name = "grid_equivalence_config";
        c.tolerance = "excess <= 1e-12 bps/Hz; offsets <= 2 steps; tight within 1e-9";
        c.observed = eq.excess_bpshz;
        c.passed = eq.passed;
        c.detail = eq.detail.empty() ? "rho offset " + fmt(eq.rho_offset_steps) + " steps, phi offset " +
                                           fmt(eq.phi_offset_steps) + " steps"
                                     : eq.detail;
        report.checks.push_back(c);

        RandomStream ball_rng(options.seed, 1);
        const auto ball = sampled_worst_case_check(est, sol.w, config.psi, budget.samples, ball_rng);
        CheckResult b;
        b.name = "worst_case_ball_config";
        const bool exact = config.psi == 0.0;
        const double tol = exact ? 0.0 : 1e-12;
        b.tolerance = exact ? "psi = 0: every sample equals |h^H w|^2 exactly" : "sampled min >= bound - 1e-12";
        b.observed = ball.scaled_bound_mw - ball.min_sampled_gain_mw;
        b.passed = b.observed <= tol && std::abs(ball.minimizer_gain_mw - ball.scaled_bound_mw) <= tol;
        b.detail = "bound " + fmt(ball.scaled_bound_mw) + " mW, sampled min " + fmt(ball.min_sampled_gain_mw) + " mW";
        report.checks.push_back(b);
    }

    // Random feasible instances.
    {
        CheckResult eqc{"grid_equivalence_random", "excess <= 1e-12 bps/Hz; offsets <= 2 steps; tight within 1e-9",
                        -std::numeric_limits<double>::infinity(), true, ""};
        CheckResult bfc{"beamformer_optimality", "sampled gain <= p*||h||^2 + 1e-12",
                        -std::numeric_limits<double>::infinity(), true, ""};
        CheckResult ballc{"worst_case_ball_random", "sampled min >= (1-sqrt(psi))^2 p ||h||^2 - 1e-12; minimizer attains within 1e-12",
                          -std::numeric_limits<double>::infinity(), true, ""};
        std::size_t failed = 0;
        for (std::size_t k = 0; k < budget.grid_instances; ++k) {
            RandomStream rng(options.seed, 1000 + k);
            const RandomInstance inst = random_feasible_instance(config, rng, grid);
            Solution sol = solve(inst.config, inst.estimate);
            sol.splits.phi *= 1.0 + options.phi_fault_rel;
            const auto eq = check_grid_equivalence(inst.config, inst.estimate, sol, grid);
            eqc.observed = std::max(eqc.observed, eq.excess_bpshz);
            if (!eq.passed) {
                eqc.passed = false;
                if (failed++ == 0)
                    eqc.detail = "instance " + std::to_string(k) + ": " + eq.detail;
            }

            const double p = inst.config.radiated_budget_mw();
            const auto bf = beamformer_optimality_check(inst.estimate, p, budget.samples, rng);
            const double bf_excess = bf.max_sampled_gain_mw - bf.closed_gain_mw;
            bfc.observed = std::max(bfc.observed, bf_excess);
            bfc.passed = bfc.passed && bf_excess <= 1e-12 &&
                         std::abs(bf.achieved_gain_mw - bf.closed_gain_mw) <= 1e-12 * std::max(1.0, bf.closed_gain_mw);

            const auto ball = sampled_worst_case_check(inst.estimate, sol.w, inst.config.psi, budget.samples, rng);
            const double ball_gap = sol.gamma_mw - ball.min_sampled_gain_mw;
            ballc.observed = std::max(ballc.observed, ball_gap);
            ballc.passed = ballc.passed && ball_gap <= 1e-12 && std::abs(ball.minimizer_gain_mw - sol.gamma_mw) <= 1e-12;
        }
        if (failed > 0)
            eqc.detail += " (" + std::to_string(failed) + " of " + std::to_string(budget.grid_instances) + " failed)";
        else
            eqc.detail = std::to_string(budget.grid_instances) + " instances";
        report.checks.push_back(eqc);
        report.checks.push_back(bfc);
        report.checks.push_back(ballc);
    }

    // Balance-point perturbation.
    {
        CheckResult c{"balance_perturbation", "objective at phi* +/- delta > (theta + eps_bar)/gamma",
                      std::numeric_limits<double>::infinity(), true, ""};
        for (std::size_t k = 0; k < budget.balance_triples; ++k) {
            RandomStream rng(options.seed, 500000 + k);
            const RandomInstance inst = random_feasible_instance(config, rng, grid);
            const Solution sol = solve(inst.config, inst.estimate);
            const double half = std::min(sol.splits.phi, 1.0 - sol.splits.phi);
            const std::array<double, 3> deltas{1e-3 * half, 1e-2 * half, 0.1 * half};
            const auto rep = perturbation_test_balance(sol.gamma_mw, sol.theta_used_mw, sol.epsilon_bar_mw, deltas);
            for (const auto &e : rep.entries)
                c.observed = std::min({c.observed, e.margin_up, e.margin_down});
            c.passed = c.passed && rep.passed;
        }
        c.detail = "observed = smallest objective increase (must be > 0)";
        report.checks.push_back(c);
    }
    return report;
}

} // namespace swipt::oracle
