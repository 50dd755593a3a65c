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

// Acceptance gate: one PASS/FAIL line per primary criterion. Exit status is
// nonzero if any line fails.

#include "reference.hpp"

#include "swipt/experiments.hpp"
#include "swipt/io.hpp"
#include "swipt/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace swipt;
namespace fs = std::filesystem;

namespace {

// Tolerances and budgets.
constexpr double kRoundTripTolRel = 1e-9;     // times M_eh
constexpr double kBisectionTolMw = 1e-10;
constexpr double kRoundTripSeconds = 1.0;
constexpr std::size_t kRoundTripPoints = 1000;

constexpr std::size_t kGridInstances = 200;
constexpr std::size_t kGridResolution = 1000;
constexpr double kGridExcessTol = 1e-12;      // bps/Hz
constexpr double kGridStepTol = 2.0;
constexpr double kGridSeconds = 60.0;

constexpr std::size_t kSamplesPerInstance = 100000;
constexpr double kGainTolMw = 1e-12;

constexpr std::size_t kBalanceTriples = 100;
constexpr std::array<double, 3> kBalanceDeltaFractions{1e-3, 1e-2, 0.1};

constexpr std::size_t kFigureRealizations = 1000;
constexpr double kRegionSeconds = 30.0;
constexpr double kCsiSeconds = 60.0;
constexpr double kCsiEpsilonMw = 0.2;

constexpr std::uint64_t kSeed = 20260401;

struct Line {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<Line> g_lines;

void report(const std::string &name, bool passed, const std::string &detail)
{
    g_lines.push_back({name, passed, detail});
    std::printf("%s  %-32s %s\n", passed ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<oracle::RandomInstance> draw_instances(std::size_t n, std::uint64_t stream)
{
    const oracle::GridSpec grid{kGridResolution};
    std::vector<oracle::RandomInstance> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        RandomStream rng(kSeed + stream, k);
        out.push_back(oracle::random_feasible_instance(SystemConfig{}, rng, grid));
    }
    return out;
}

void eh_round_trip()
{
    const EhCurve curve{};
    const auto t0 = std::chrono::steady_clock::now();
    double worst_trip = 0.0, worst_gap = 0.0;
    for (std::size_t k = 0; k < kRoundTripPoints; ++k) {
        const double eps = 1e-4 * std::pow(3.8 / 1e-4, static_cast<double>(k) / (kRoundTripPoints - 1));
        const double inv = eh_dc_inverse(eps, curve);
        worst_trip = std::max(worst_trip, std::abs(eh_dc(inv, curve) - eps));
        const double bis = static_cast<double>(ref::eh_inverse_bisect(eps, 3.9L, 1500.0L, 0.0022L));
        worst_gap = std::max(worst_gap, std::abs(inv - bis));
    }
    const double secs = seconds_since(t0);
    const bool ok = worst_trip <= kRoundTripTolRel * curve.m_eh_mw && worst_gap <= kBisectionTolMw &&
                    secs < kRoundTripSeconds;
    report("eh_inversion_round_trip", ok,
           "round trip " + fmt(worst_trip) + " mW (tol " + fmt(kRoundTripTolRel * curve.m_eh_mw) +
               "), bisection gap " + fmt(worst_gap) + " mW (tol " + fmt(kBisectionTolMw) + "), " + fmt(secs) +
               " s (limit " + fmt(kRoundTripSeconds) + ")");
}

void grid_oracle(const std::vector<oracle::RandomInstance> &instances)
{
    const oracle::GridSpec grid{kGridResolution};
    const auto t0 = std::chrono::steady_clock::now();
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_rho = 0.0, worst_phi = 0.0;
    std::size_t failures = 0;
    for (const auto &inst : instances) {
        const Solution sol = solve(inst.config, inst.estimate);
        const auto g = oracle::grid_search_splits(inst.config, inst.estimate, grid);
        if (!sol.feasible || !g.found) {
            ++failures;
            continue;
        }
        const double closed = rate(sol.gamma_mw, sol.splits.rho, inst.config.noise);
        const double excess = g.rate_bpshz - closed;
        const double drho = std::abs(g.rho - sol.splits.rho) / grid.rho_step();
        const double dphi = std::abs(g.phi - sol.splits.phi) / grid.phi_step();
        worst_excess = std::max(worst_excess, excess);
        worst_rho = std::max(worst_rho, drho);
        worst_phi = std::max(worst_phi, dphi);
        if (excess > kGridExcessTol || drho > kGridStepTol || dphi > kGridStepTol)
            ++failures;
    }
    const double secs = seconds_since(t0);
    const bool ok = failures == 0 && secs < kGridSeconds;
    report("closed_form_vs_grid", ok,
           std::to_string(instances.size()) + " instances at " + std::to_string(kGridResolution) + "^2, max excess " +
               fmt(worst_excess) + " bps/Hz (tol " + fmt(kGridExcessTol) + "), max offset rho " + fmt(worst_rho) +
               " / phi " + fmt(worst_phi) + " steps (tol " + fmt(kGridStepTol) + "), " +
               std::to_string(failures) + " failures, " + fmt(secs) + " s (limit " + fmt(kGridSeconds) + ")");
}

// Random unit directions scaled to the budget, sampled here rather than in the library.
void beamformer_optimality(const std::vector<oracle::RandomInstance> &instances)
{
    double worst = -std::numeric_limits<double>::infinity();
    double worst_attained = 0.0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const auto &inst = instances[k];
        const double p = inst.config.radiated_budget_mw();
        const auto h = inst.estimate.h_hat();
        const double closed = p * inst.estimate.norm_sq();
        RandomStream rng(kSeed + 7, k);
        std::vector<std::complex<double>> u(h.size());
        for (std::size_t s = 0; s < kSamplesPerInstance; ++s) {
            double nrm = 0.0;
            for (auto &x : u) {
                x = {rng.normal(), rng.normal()};
                nrm += std::norm(x);
            }
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = 0; i < h.size(); ++i)
                acc += std::conj(h[i]) * u[i];
            worst = std::max(worst, p * std::norm(acc) / nrm - closed);
        }
        const auto w = optimal_beamformer(inst.estimate, p);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < h.size(); ++i)
            acc += std::conj(h[i]) * w[i];
        worst_attained = std::max(worst_attained, std::abs(std::norm(acc) - closed));
    }
    const bool ok = worst <= kGainTolMw && worst_attained <= kGainTolMw;
    report("beamformer_optimality", ok,
           std::to_string(instances.size()) + " x " + std::to_string(kSamplesPerInstance) +
               " samples, max excess over p||h||^2 " + fmt(worst) + " mW (tol " + fmt(kGainTolMw) +
               "), MRT gap " + fmt(worst_attained) + " mW");
}

// Errors uniform in the ball ||e||^2 <= psi ||h||^2 over 2M real dimensions.
void worst_case_bound(const std::vector<oracle::RandomInstance> &instances)
{
    double worst_below = -std::numeric_limits<double>::infinity();
    double worst_minimizer = 0.0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const auto &inst = instances[k];
        const double psi = inst.config.psi;
        const double p = inst.config.radiated_budget_mw();
        const auto h = inst.estimate.h_hat();
        const auto w = optimal_beamformer(inst.estimate, p);
        const double bound = (1.0 - std::sqrt(psi)) * (1.0 - std::sqrt(psi)) * p * inst.estimate.norm_sq();
        const double radius = std::sqrt(psi) * inst.estimate.norm();
        const double dims = 2.0 * static_cast<double>(h.size());

        RandomStream rng(kSeed + 11, k);
        std::vector<std::complex<double>> e(h.size());
        for (std::size_t s = 0; s < kSamplesPerInstance; ++s) {
            double nrm = 0.0;
            for (auto &x : e) {
                x = {rng.normal(), rng.normal()};
                nrm += std::norm(x);
            }
            const double scale = radius * std::pow(rng.uniform(), 1.0 / dims) / std::sqrt(nrm);
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = 0; i < h.size(); ++i)
                acc += std::conj(h[i] + scale * e[i]) * w[i];
            worst_below = std::max(worst_below, bound - std::norm(acc));
        }
        std::complex<double> at_min{0.0, 0.0};
        for (std::size_t i = 0; i < h.size(); ++i)
            at_min += std::conj(h[i] - std::sqrt(psi) * h[i]) * w[i];
        worst_minimizer = std::max(worst_minimizer, std::abs(std::norm(at_min) - bound));
    }
    const bool ok = worst_below <= kGainTolMw && worst_minimizer <= kGainTolMw;
    report("worst_case_bound", ok,
           std::to_string(instances.size()) + " x " + std::to_string(kSamplesPerInstance) +
               " samples, max shortfall below (1-sqrt(psi))^2 p||h||^2 " + fmt(worst_below) + " mW (tol " +
               fmt(kGainTolMw) + "), minimizer gap " + fmt(worst_minimizer) + " mW (tol " + fmt(kGainTolMw) + ")");
}

void balance_perturbation()
{
    const auto instances = draw_instances(kBalanceTriples, 3);
    double smallest = std::numeric_limits<double>::infinity();
    std::size_t failures = 0;
    for (const auto &inst : instances) {
        const Solution sol = solve(inst.config, inst.estimate);
        const double g = sol.gamma_mw, theta = sol.theta_used_mw, eb = sol.epsilon_bar_mw;
        const double phi = eb / (theta + eb);
        const double baseline = (theta + eb) / g;
        const auto objective = [&](double f) { return std::max(theta / ((1.0 - f) * g), eb / (f * g)); };
        for (double frac : kBalanceDeltaFractions) {
            const double delta = frac * std::min(phi, 1.0 - phi);
            for (double f : {phi + delta, phi - delta}) {
                const double margin = objective(f) - baseline;
                smallest = std::min(smallest, margin / baseline);
                if (!(margin > 0.0))
                    ++failures;
            }
        }
    }
    report("balance_perturbation", failures == 0,
           std::to_string(kBalanceTriples) + " triples x 3 deltas x 2 sides, smallest relative increase " +
               fmt(smallest) + " (must be > 0), " + std::to_string(failures) + " failures");
}

std::string join_failures(const std::vector<std::string> &items)
{
    std::string out;
    for (std::size_t k = 0; k < items.size() && k < 3; ++k)
        out += (k ? "; " : "") + items[k];
    if (items.size() > 3)
        out += "; ...";
    return out;
}

void region_ordering()
{
    const SystemConfig config;
    ExperimentSettings s;
    s.realizations = kFigureRealizations;
    s.seed = kSeed;
    const auto t0 = std::chrono::steady_clock::now();
    const SweepResult r = rate_energy_region(config, s);
    const double secs = seconds_since(t0);

    std::vector<double> ac, dc;
    for (const auto &row : r.rows)
        (row.scenario == "AC" ? ac : dc).push_back(row.stats.mean_rate_bpshz);

    std::vector<std::string> problems;
    double min_gap = std::numeric_limits<double>::infinity();
    std::size_t compared = 0;
    for (std::size_t k = 0; k < ac.size(); ++k) {
        const double eps = s.epsilon_grid_mw[k];
        if (std::isnan(ac[k]) || std::isnan(dc[k]))
            continue;
        ++compared;
        min_gap = std::min(min_gap, ac[k] - dc[k]);
        if (!(ac[k] > dc[k]))
            problems.push_back("AC <= DC at eps=" + fmt(eps));
        if (k > 0 && !std::isnan(ac[k - 1]) && ac[k] > ac[k - 1])
            problems.push_back("AC rises at eps=" + fmt(eps));
        if (k > 0 && !std::isnan(dc[k - 1]) && dc[k] > dc[k - 1])
            problems.push_back("DC rises at eps=" + fmt(eps));
    }
    if (compared == 0)
        problems.push_back("no grid point feasible for both");
    const bool ok = problems.empty() && secs < kRegionSeconds;
    report("rate_energy_region_ordering", ok,
           std::to_string(s.epsilon_grid_mw.size()) + " eps points, n=" + std::to_string(kFigureRealizations) +
               ", " + std::to_string(compared) + " compared, min AC-DC gap " + fmt(min_gap) + " bps/Hz, " +
               fmt(secs) + " s (limit " + fmt(kRegionSeconds) + ")" +
               (problems.empty() ? "" : " [" + join_failures(problems) + "]"));
}

void csi_ordering()
{
    SystemConfig config;
    config.epsilon_mw = kCsiEpsilonMw;
    ExperimentSettings s;
    s.realizations = kFigureRealizations;
    s.seed = kSeed;
    s.p0_grid_dbm = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    s.psi_list = {0.0, 0.01, 0.05};
    const auto t0 = std::chrono::steady_clock::now();
    const SweepResult r = csi_impact_sweep(config, s);
    const double secs = seconds_since(t0);

    const std::size_t np = s.psi_list.size();
    auto mean = [&](std::size_t ip, std::size_t is) { return r.rows[ip * np + is].stats.mean_rate_bpshz; };
    std::vector<std::string> problems;
    for (std::size_t ip = 0; ip < s.p0_grid_dbm.size(); ++ip) {
        for (std::size_t is = 0; is < np; ++is) {
            if (std::isnan(mean(ip, is)))
                problems.push_back("no feasible realization at P0=" + fmt(s.p0_grid_dbm[ip]));
            if (ip > 0 && !(mean(ip, is) > mean(ip - 1, is)))
                problems.push_back("not increasing at P0=" + fmt(s.p0_grid_dbm[ip]) + " psi=" + fmt(s.psi_list[is]));
            if (is > 0 && !(mean(ip, is) < mean(ip, is - 1)))
                problems.push_back("not decreasing at P0=" + fmt(s.p0_grid_dbm[ip]) + " psi=" + fmt(s.psi_list[is]));
        }
    }
    const bool ok = problems.empty() && secs < kCsiSeconds;
    report("csi_impact_ordering", ok,
           std::to_string(s.p0_grid_dbm.size()) + " P0 x " + std::to_string(np) + " psi cells, n=" +
               std::to_string(kFigureRealizations) + ", rate at (0 dBm, psi 0) " + fmt(mean(0, 0)) +
               ", at (20 dBm, psi 0) " + fmt(mean(s.p0_grid_dbm.size() - 1, 0)) + " bps/Hz, " + fmt(secs) +
               " s (limit " + fmt(kCsiSeconds) + ")" + (problems.empty() ? "" : " [" + join_failures(problems) + "]"));
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism()
{
    const fs::path root = fs::temp_directory_path() / "swipt_acceptance_determinism";
    fs::remove_all(root);
    RunConfig config;
    config.experiments.realizations = 500;
    config.experiments.seed = kSeed;

    const auto first = write_run_outputs(config, "region", rate_energy_region(config.system, config.experiments),
                                         root / "first", false);
    const RunConfig replay = load_run_config(first.manifest);
    const auto second = write_run_outputs(replay, "region", rate_energy_region(replay.system, replay.experiments),
                                          root / "second", false);
    const std::string a = slurp(first.csv), b = slurp(second.csv);
    const bool same = !a.empty() && a == b;
    const bool manifests_same = slurp(first.manifest) == slurp(second.manifest);
    report("determinism", same && manifests_same,
           "region CSV " + std::to_string(a.size()) + " bytes, sha256 " + sha256_file(first.csv).substr(0, 16) +
               (same ? " identical" : " DIFFERS") + " on replay from manifest; manifests " +
               (manifests_same ? "identical" : "differ"));
}

} // namespace

int main()
{
    const auto run = [](const char *name, const std::function<void()> &fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            report(name, false, std::string("exception: ") + e.what());
        }
    };

    run("eh_inversion_round_trip", eh_round_trip);
    std::vector<oracle::RandomInstance> instances;
    run("instance_generation", [&] { instances = draw_instances(kGridInstances, 1); });
    run("closed_form_vs_grid", [&] { grid_oracle(instances); });
    run("beamformer_optimality", [&] { beamformer_optimality(instances); });
    run("worst_case_bound", [&] { worst_case_bound(instances); });
    run("balance_perturbation", balance_perturbation);
    run("rate_energy_region_ordering", region_ordering);
    run("csi_impact_ordering", csi_ordering);
    run("determinism", determinism);

    const auto failed = std::count_if(g_lines.begin(), g_lines.end(), [](const Line &l) { return !l.passed; });
    std::printf("%zu criteria, %td failed\n", g_lines.size(), failed);
    return failed == 0 ? 0 : 1;
}
