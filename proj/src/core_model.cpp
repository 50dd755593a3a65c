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

#include "swipt/core_model.hpp"

#include "swipt/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace swipt {

namespace {

constexpr double kExpClamp = 700.0;

double clamped_exp(double x) { return std::exp(std::clamp(x, -kExpClamp, kExpClamp)); }

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

void EhCurve::validate() const
{
    if (!positive_finite(m_eh_mw))
        throw_domain("EH curve saturation m_eh must be finite and > 0");
    if (!positive_finite(a_per_mw))
        throw_domain("EH curve steepness a must be finite and > 0");
    if (!positive_finite(b_mw))
        throw_domain("EH curve center b must be finite and > 0");
}

void SplitPair::validate() const
{
    if (!(rho > 0.0 && rho < 1.0))
        throw_domain("power-splitting ratio rho must lie in (0,1), got " + std::to_string(rho));
    if (!(phi > 0.0 && phi < 1.0))
        throw_domain("power-splitting ratio phi must lie in (0,1), got " + std::to_string(phi));
}

void NoiseModel::validate() const
{
    if (!positive_finite(sigma0_sq_mw) || !positive_finite(sigma1_sq_mw))
        throw_domain("noise variances must be finite and > 0");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw)
{
    if (!(mw > 0.0))
        throw_domain("mw_to_dbm: power must be > 0");
    return 10.0 * std::log10(mw);
}

double rate(double gain_mw, double rho, const NoiseModel &noise)
{
    if (!(rho > 0.0 && rho < 1.0))
        throw_domain("rate: rho must lie in (0,1), got " + std::to_string(rho));
    if (!(gain_mw >= 0.0))
        throw_domain("rate: gain must be >= 0");
    const double denom = noise.sigma0_sq_mw + noise.sigma1_sq_mw / (1.0 - rho);
    return std::log1p(gain_mw / denom) / std::numbers::ln2;
}

double ac_supply_power(double gain_mw, const SplitPair &splits)
{
    splits.validate();
    if (!(gain_mw >= 0.0))
        throw_domain("ac_supply_power: gain must be >= 0");
    return splits.rho * (1.0 - splits.phi) * gain_mw;
}

// The normalized logistic collapses to M (1 - e^{-ax}) / (1 + e^{ab - ax}),
// which is exactly zero at x = 0 and never exceeds M.
double eh_dc(double input_mw, const EhCurve &curve)
{
    if (!(input_mw >= 0.0))
        throw_domain("eh_dc: input power must be >= 0");
    const double ax = curve.a_per_mw * input_mw;
    const double rise = -std::expm1(-std::min(ax, kExpClamp));
    return curve.m_eh_mw * rise / (1.0 + clamped_exp(curve.a_per_mw * curve.b_mw - ax));
}

// b - (1/a) ln( e^{ab}(M - eps) / (e^{ab} eps + M) ), rearranged so that the
// b term cancels analytically instead of numerically.
double eh_dc_inverse(double target_mw, const EhCurve &curve)
{
    if (!(target_mw >= 0.0))
        throw_domain("eh_dc_inverse: target must be >= 0");
    if (target_mw >= curve.m_eh_mw)
        throw Error(ErrorCode::infeasible_target,
                    "harvest target " + std::to_string(target_mw) +
                        " mW is at or above the saturation level " + std::to_string(curve.m_eh_mw) +
                        " mW and can never be reached");
    const double ratio = target_mw / curve.m_eh_mw;
    const double e_ab = clamped_exp(curve.a_per_mw * curve.b_mw);
    return (std::log1p(e_ab * ratio) - std::log1p(-ratio)) / curve.a_per_mw;
}

} // namespace swipt
