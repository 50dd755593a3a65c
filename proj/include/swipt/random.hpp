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

#include <complex>
#include <cstdint>
#include <random>

namespace swipt {

// Seeded random stream with bit-exact output across standard libraries.
// Streams for independent work items are derived from (master seed, index).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0);

    // Uniform in [0, 1).
    double uniform();

    // Uniform in (0, 1].
    double uniform_open_low() { return 1.0 - uniform(); }

    // Standard normal (Box-Muller; one of each pair is discarded).
    double normal();

    // Circularly-symmetric complex Gaussian with unit total variance.
    std::complex<double> complex_normal();

private:
    std::mt19937_64 engine_;
};

} // namespace swipt
