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

#include "doctest.h"
#include "reference.hpp"

#include "swipt/channel.hpp"
#include "swipt/error.hpp"
#include "swipt/random.hpp"

#include <cmath>
#include <limits>

using namespace swipt;

TEST_CASE("path loss")
{
    CHECK(pathloss_gain({6.0, 2.6, 1.0}) == 1.0);
    CHECK(pathloss_gain({6.0, 2.0, 2.0}) == doctest::Approx(0.25).epsilon(1e-15));
    // 4^-2.6 = 2^-5.2
    CHECK(pathloss_gain({6.0, 2.6, 4.0}) == doctest::Approx(0.027204705103003879).epsilon(1e-14));
    CHECK_THROWS_AS(pathloss_gain({6.0, 2.6, 0.0}), Error);
    CHECK_THROWS_AS(pathloss_gain({6.0, -1.0, 4.0}), Error);
}

TEST_CASE("channel estimate construction")
{
    ChannelEstimate h({{3.0, 4.0}, {0.0, 0.0}});
    CHECK(h.size() == 2);
    CHECK(h.norm_sq() == 25.0);
    CHECK(h.norm() == 5.0);
    CHECK_THROWS_AS(ChannelEstimate(ComplexVector{}), Error);
    CHECK_THROWS_AS(ChannelEstimate(ComplexVector{{0.0, 0.0}, {0.0, 0.0}}), Error);
    CHECK_THROWS_AS(ChannelEstimate(ComplexVector{{std::nan(""), 0.0}}), Error);
    CHECK_THROWS_AS(ChannelEstimate(ComplexVector{{std::numeric_limits<double>::infinity(), 0.0}}), Error);
}

TEST_CASE("inner product conjugates the left operand")
{
    const ComplexVector a{{0.0, 1.0}};
    const ComplexVector b{{0.0, 1.0}};
    CHECK(inner(a, b) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(inner(a, ComplexVector{{1, 0}, {1, 0}}), Error);
}

TEST_CASE("sampling is reproducible and keyed by stream")
{
    const FadingParams fading{};
    RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    const auto ha = sample_channel(fading, 4, a);
    const auto hb = sample_channel(fading, 4, b);
    const auto hc = sample_channel(fading, 4, c);
    const auto hd = sample_channel(fading, 4, d);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(ha.h_hat()[i] == hb.h_hat()[i]);
        CHECK(ha.h_hat()[i] != hc.h_hat()[i]);
        CHECK(ha.h_hat()[i] != hd.h_hat()[i]);
    }
    CHECK_THROWS_AS(sample_channel(fading, 0, a), Error);

    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        sum += std::norm(ha.h_hat()[i]);
    CHECK(ha.norm_sq() == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("pure line of sight has constant magnitude")
{
    const FadingParams los{std::numeric_limits<double>::infinity(), 2.6, 4.0};
    RandomStream rng(5);
    const double g = pathloss_gain(los);
    for (int k = 0; k < 100; ++k) {
        const auto h = sample_channel(los, 3, rng);
        for (const auto &x : h.h_hat())
            CHECK(std::abs(x) == doctest::Approx(std::sqrt(g)).epsilon(1e-14));
    }
}

TEST_CASE("second moments")
{
    RandomStream rng(42);
    const FadingParams fading{};
    const double g = pathloss_gain(fading);
    constexpr int n = 100000;
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
        acc += sample_channel(fading, 4, rng).norm_sq() / 4.0;
    CHECK(std::abs(acc / n - g) <= 0.01 * g);

    // Rayleigh limit: zero mean, variance G per entry
    const FadingParams rayleigh{-std::numeric_limits<double>::infinity(), 2.6, 4.0};
    Complex mean{0.0, 0.0};
    double var = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto h = sample_channel(rayleigh, 1, rng);
        mean += h.h_hat()[0];
        var += std::norm(h.h_hat()[0]);
    }
    mean /= static_cast<double>(n);
    CHECK(std::abs(mean) <= 0.01 * std::sqrt(g));
    CHECK(std::abs(var / n - g) <= 0.01 * g);
}

TEST_CASE("worst-case error and gains")
{
    const ChannelEstimate h({{1.0, 0.0}, {0.0, 0.0}});
    const auto e0 = worst_case_error(h, 0.0);
    CHECK(e0[0] == Complex(0.0, 0.0));
    const auto e = worst_case_error(h, 0.25);
    CHECK(e[0] == Complex(-0.5, 0.0));
    CHECK(e[1] == Complex(0.0, 0.0));
    CHECK_THROWS_AS(worst_case_error(h, 1.0), Error);
    CHECK_THROWS_AS(worst_case_error(h, -0.1), Error);

    RandomStream rng(9);
    const auto g = sample_channel({}, 4, rng);
    const auto e9 = worst_case_error(g, 0.09);
    CHECK(norm_sq(e9) / g.norm_sq() == doctest::Approx(0.09).epsilon(1e-12));

    // collinear beamformer: scaled form and ball minimum coincide
    for (double psi : {0.0, 0.01, 0.04, 0.25, 0.81}) {
        ComplexVector w(g.h_hat().begin(), g.h_hat().end());
        for (auto &x : w)
            x *= Complex(0.3, -1.7);
        const double scaled = worst_case_gain_scaled(g, w, psi);
        const double ball = worst_case_gain_ball(g, w, psi);
        CHECK(std::abs(scaled - ball) <= 1e-12 * std::max(1.0, scaled));

        ComplexVector shifted(g.h_hat().begin(), g.h_hat().end());
        const auto ew = worst_case_error(g, psi);
        for (std::size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += ew[i];
        CHECK(std::abs(std::norm(inner(shifted, w)) - scaled) <= 1e-12 * std::max(1.0, scaled));
    }

    // w orthogonal to h: zero worst case
    const ChannelEstimate h2({{1.0, 0.0}, {0.0, 0.0}});
    const ComplexVector w2{{0.0, 0.0}, {1.0, 0.0}};
    CHECK(worst_case_gain_ball(h2, w2, 0.1) == 0.0);
    CHECK(worst_case_gain_scaled(h2, std::span<const Complex>(w2), 0.0) == 0.0);
}

TEST_CASE("ball minimum agrees with a phase scan in one dimension")
{
    const std::complex<long double> h(0.7L, -0.2L), w(1.1L, 0.4L);
    const ChannelEstimate est(ComplexVector{Complex(0.7, -0.2)});
    const ComplexVector wv{Complex(1.1, 0.4)};
    for (double psi : {0.01, 0.2, 0.6}) {
        const double scan = static_cast<double>(ref::worst_gain_scalar(h, w, psi));
        const double ball = worst_case_gain_ball(est, wv, psi);
        CHECK(ball <= scan + 1e-12);
        CHECK(scan - ball <= 1e-8);
    }
}

TEST_CASE("worst-case gains are non-increasing in psi")
{
    RandomStream rng(17);
    const auto h = sample_channel({}, 4, rng);
    ComplexVector w(4);
    for (auto &x : w)
        x = rng.complex_normal();
    double prev_ball = std::numeric_limits<double>::infinity();
    double prev_scaled = prev_ball;
    for (double psi = 0.0; psi < 1.0; psi += 0.01) {
        const double b = worst_case_gain_ball(h, w, psi);
        const double p = worst_case_gain_scaled(h, w, psi);
        CHECK(b <= prev_ball);
        CHECK(p <= prev_scaled);
        prev_ball = b;
        prev_scaled = p;
    }
}
