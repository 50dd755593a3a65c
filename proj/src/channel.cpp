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

#include "swipt/channel.hpp"

#include "swipt/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace swipt {

void FadingParams::validate() const
{
    if (!(std::isfinite(distance_m) && distance_m > 0.0))
        throw_domain("fading: distance_m must be finite and > 0");
    if (!(std::isfinite(pathloss_exponent) && pathloss_exponent > 0.0))
        throw_domain("fading: pathloss_exponent must be finite and > 0");
    if (std::isnan(rician_k_db))
        throw_domain("fading: rician_k_db must not be NaN");
}

double FadingParams::rician_k() const { return std::pow(10.0, rician_k_db / 10.0); }

double norm_sq(std::span<const Complex> v)
{
    double acc = 0.0;
    for (const auto &x : v)
        acc += std::norm(x);
    return acc;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.size() != b.size())
        throw_domain("inner product of vectors with different lengths");
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

ChannelEstimate::ChannelEstimate(ComplexVector h_hat) : h_hat_(std::move(h_hat)), norm_sq_(0.0)
{
    if (h_hat_.empty())
        throw_domain("channel estimate must have at least one antenna");
    for (const auto &x : h_hat_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw_domain("channel estimate contains a non-finite entry");
    norm_sq_ = swipt::norm_sq(h_hat_);
    if (!(norm_sq_ > 0.0))
        throw_domain("channel estimate is all zero");
}

double ChannelEstimate::norm() const { return std::sqrt(norm_sq_); }

double pathloss_gain(const FadingParams &params)
{
    params.validate();
    return std::pow(params.distance_m, -params.pathloss_exponent);
}

ChannelEstimate sample_channel(const FadingParams &params, std::size_t antennas, RandomStream &rng)
{
    if (antennas == 0)
        throw_domain("sample_channel: antenna count must be >= 1");
    const double amplitude = std::sqrt(pathloss_gain(params));
    const double k = params.rician_k();
    double los = 1.0, nlos = 0.0;
    if (std::isfinite(k)) {
        los = std::sqrt(k / (k + 1.0));
        nlos = std::sqrt(1.0 / (k + 1.0));
    }

    ComplexVector h(antennas);
    for (auto &entry : h) {
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const Complex scattered = rng.complex_normal();
        entry = amplitude * (los * std::polar(1.0, theta) + nlos * scattered);
    }
    return ChannelEstimate(std::move(h));
}

void validate_error_factor(double psi)
{
    if (!(psi >= 0.0 && psi < 1.0))
        throw_domain("error factor psi must lie in [0,1), got " + std::to_string(psi));
}

ComplexVector worst_case_error(const ChannelEstimate &estimate, double psi)
{
    validate_error_factor(psi);
    const double scale = -std::sqrt(psi);
    ComplexVector e(estimate.h_hat().begin(), estimate.h_hat().end());
    for (auto &x : e)
        x *= scale;
    return e;
}

double worst_case_gain_scaled(const ChannelEstimate &estimate, std::span<const Complex> w, double psi)
{
    validate_error_factor(psi);
    const double margin = 1.0 - std::sqrt(psi);
    return margin * margin * std::norm(inner(estimate.h_hat(), w));
}

double worst_case_gain_ball(const ChannelEstimate &estimate, std::span<const Complex> w, double psi)
{
    validate_error_factor(psi);
    const double projection = std::abs(inner(estimate.h_hat(), w));
    const double shrink = std::sqrt(psi) * estimate.norm() * std::sqrt(norm_sq(w));
    const double amplitude = std::max(projection - shrink, 0.0);
    return amplitude * amplitude;
}

} // namespace swipt
