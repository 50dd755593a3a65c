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

#include "swipt/random.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace swipt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct FadingParams {
    double rician_k_db = 6.0;
    double pathloss_exponent = 2.6;
    double distance_m = 4.0;

    void validate() const;
    // Linear Rician factor; +inf for a pure line-of-sight channel.
    double rician_k() const;
};

// Estimated downlink channel h_hat. Construction rejects empty, non-finite
// and all-zero vectors.
class ChannelEstimate {
public:
    explicit ChannelEstimate(ComplexVector h_hat);

    std::span<const Complex> h_hat() const { return h_hat_; }
    std::size_t size() const { return h_hat_.size(); }
    double norm_sq() const { return norm_sq_; }
    double norm() const;

private:
    ComplexVector h_hat_;
    double norm_sq_;
};

double norm_sq(std::span<const Complex> v);

// a^H b
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

// Distance path loss d^(-alpha), unit gain at 1 m.
double pathloss_gain(const FadingParams &params);

// One Rician channel draw: per-antenna line-of-sight term with an independent
// uniform phase plus a unit-variance scattered term, scaled by the path loss.
ChannelEstimate sample_channel(const FadingParams &params, std::size_t antennas, RandomStream &rng);

// Minimizer of |(h_hat + e)^H w|^2 over ||e||^2 <= psi ||h_hat||^2 for a
// beamformer collinear with h_hat: e = -sqrt(psi) h_hat.
ComplexVector worst_case_error(const ChannelEstimate &estimate, double psi);

// (1 - sqrt(psi))^2 |h_hat^H w|^2. Exact when w is collinear with h_hat.
double worst_case_gain_scaled(const ChannelEstimate &estimate, std::span<const Complex> w, double psi);

// Exact minimum of |(h_hat + e)^H w|^2 over the error ball, for any w:
// max(|h_hat^H w| - sqrt(psi) ||h_hat|| ||w||, 0)^2.
double worst_case_gain_ball(const ChannelEstimate &estimate, std::span<const Complex> w, double psi);

void validate_error_factor(double psi);

} // namespace swipt
