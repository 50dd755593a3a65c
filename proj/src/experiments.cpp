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

#include "swipt/experiments.hpp"

#include "swipt/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace swipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string psi_label(double psi)
{
    std::ostringstream os;
    os << "psi=" << psi;
    return os.str();
}

} // namespace

std::vector<double> ExperimentSettings::log_spaced(double lo, double hi, std::size_t count)
{
    if (!(lo > 0.0 && hi >= lo) || count == 0)
        throw_domain("log_spaced: need 0 < lo <= hi and count >= 1");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double span = std::log10(hi / lo);
    for (std::size_t k = 0; k < count; ++k)
        out[k] = lo * std::pow(10.0, span * static_cast<double>(k) / static_cast<double>(count - 1));
    out.back() = hi;
    return out;
}

void ExperimentSettings::validate() const
{
    auto fail = [](const std::string &field, const std::string &what) {
        throw_config("config field 'experiments." + field + "': " + what);
    };
    if (realizations == 0)
        fail("realizations", "must be >= 1");
    if (!(theta_ac_mw >= 0.0) || !std::isfinite(theta_ac_mw))
        fail("theta_ac_mw", "must be >= 0");
    if (!(theta_dc_mw >= 0.0) || !std::isfinite(theta_dc_mw))
        fail("theta_dc_mw", "must be >= 0");
    if (epsilon_grid_mw.empty())
        fail("epsilon_grid_mw", "must not be empty");
    for (double e : epsilon_grid_mw)
        if (!(e >= 0.0) || !std::isfinite(e))
            fail("epsilon_grid_mw", "values must be finite and >= 0");
    if (p0_grid_dbm.empty())
        fail("p0_grid_dbm", "must not be empty");
    for (double p : p0_grid_dbm)
        if (!std::isfinite(p))
            fail("p0_grid_dbm", "values must be finite");
    if (psi_list.empty())
        fail("psi_list", "must not be empty");
    for (double p : psi_list)
        if (!(p >= 0.0 && p < 1.0))
            fail("psi_list", "values must lie in [0,1)");
}

double CellStats::feasible_frac() const
{
    return n_total == 0 ? 0.0 : static_cast<double>(n_feasible) / static_cast<double>(n_total);
}

ChannelEstimate draw_channel(const SystemConfig &config, std::uint64_t seed, std::uint64_t index)
{
    RandomStream rng(seed, index);
    return sample_channel(config.fading, config.antennas, rng);
}

std::vector<ChannelEstimate> draw_channels(const SystemConfig &config, std::size_t n, std::uint64_t seed)
{
    std::vector<ChannelEstimate> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(draw_channel(config, seed, k));
    return out;
}

std::vector<double> realization_rates(const SystemConfig &config, std::span<const ChannelEstimate> channels)
{
    std::vector<double> out;
    out.reserve(channels.size());
    for (const auto &ch : channels) {
        const Solution sol = solve(config, ch);
        out.push_back(sol.feasible ? sol.metrics.rate_bpshz : kNaN);
    }
    return out;
}

double pairwise_sum(std::span<const double> values)
{
    if (values.size() <= 8) {
        double acc = 0.0;
        for (double v : values)
            acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

CellStats summarize(const SystemConfig &config, std::span<const ChannelEstimate> channels, bool infeasible_as_zero)
{
    CellStats stats;
    stats.n_total = channels.size();
    std::vector<double> rates, harvest;
    rates.reserve(channels.size());
    harvest.reserve(channels.size());
    for (const auto &ch : channels) {
        const Solution sol = solve(config, ch);
        if (sol.feasible) {
            ++stats.n_feasible;
            rates.push_back(sol.metrics.rate_bpshz);
            harvest.push_back(sol.metrics.eh_dc_mw);
        } else if (infeasible_as_zero) {
            rates.push_back(0.0);
        }
    }

    const auto n = static_cast<double>(rates.size());
    stats.mean_rate_bpshz = rates.empty() ? kNaN : pairwise_sum(rates) / n;
    stats.mean_eh_mw = harvest.empty() ? kNaN : pairwise_sum(harvest) / static_cast<double>(harvest.size());
    if (rates.size() >= 2) {
        std::vector<double> sq(rates.size());
        for (std::size_t k = 0; k < rates.size(); ++k) {
            const double d = rates[k] - stats.mean_rate_bpshz;
            sq[k] = d * d;
        }
        const double var = pairwise_sum(sq) / (n - 1.0);
        stats.stderr_rate = std::sqrt(var / n);
    } else {
        stats.stderr_rate = kNaN;
    }
    return stats;
}

SystemConfig with_radiated_budget_dbm(SystemConfig config, double p0_dbm)
{
    config.p_dbm = mw_to_dbm(dbm_to_mw(p0_dbm) + dbm_to_mw(config.p_circ_dbm));
    return config;
}

SweepResult rate_energy_region(const SystemConfig &config, const ExperimentSettings &settings)
{
    config.validate();
    settings.validate();
    SweepResult out;
    out.kind = SweepKind::region;
    out.realizations = settings.realizations;
    out.seed = settings.seed;

    const auto channels = draw_channels(config, settings.realizations, settings.seed);
    const std::pair<const char *, double> scenarios[] = {{"AC", settings.theta_ac_mw}, {"DC", settings.theta_dc_mw}};
    for (double eps : settings.epsilon_grid_mw) {
        for (const auto &[label, theta] : scenarios) {
            SystemConfig cfg = config;
            cfg.epsilon_mw = eps;
            cfg.theta_mw = theta;
            SweepRow row;
            row.axis = eps;
            row.scenario = label;
            row.psi = cfg.psi;
            row.theta_mw = theta;
            if (eps >= cfg.curve.m_eh_mw) {
                // Saturation is out of reach for every realization.
                row.stats.n_total = channels.size();
                row.stats.mean_rate_bpshz = settings.infeasible_as_zero ? 0.0 : kNaN;
                row.stats.stderr_rate = settings.infeasible_as_zero && channels.size() >= 2 ? 0.0 : kNaN;
                row.stats.mean_eh_mw = kNaN;
            } else {
                row.stats = summarize(cfg, channels, settings.infeasible_as_zero);
            }
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

SweepResult csi_impact_sweep(const SystemConfig &config, const ExperimentSettings &settings)
{
    config.validate();
    settings.validate();
    SweepResult out;
    out.kind = SweepKind::csi;
    out.realizations = settings.realizations;
    out.seed = settings.seed;

    const auto channels = draw_channels(config, settings.realizations, settings.seed);
    for (double p0 : settings.p0_grid_dbm) {
        for (double psi : settings.psi_list) {
            SystemConfig cfg = with_radiated_budget_dbm(config, p0);
            cfg.psi = psi;
            SweepRow row;
            row.axis = p0;
            row.scenario = psi_label(psi);
            row.psi = psi;
            row.theta_mw = cfg.theta_mw;
            row.stats = summarize(cfg, channels, settings.infeasible_as_zero);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace swipt
