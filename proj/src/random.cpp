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

#include "swipt/random.hpp"

#include <cmath>
#include <numbers>

namespace swipt {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t index)
{
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
{
    auto seq = make_seed_seq(seed, index);
    engine_.seed(seq);
}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::normal()
{
    const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
    return radius * std::cos(2.0 * std::numbers::pi * uniform());
}

std::complex<double> RandomStream::complex_normal()
{
    const double radius = std::sqrt(-std::log(uniform_open_low()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace swipt
