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

// Closed-form link model of the power-splitting receiver: unit conversions,
// achievable rate, AC supply power and the saturating DC harvest curve.
// All powers are linear mW unless a name says otherwise.

namespace swipt {

// Saturating (logistic) energy-harvest curve, normalized so that zero input
// harvests exactly zero.
struct EhCurve {
    double m_eh_mw = 3.9;      // saturation level
    double a_per_mw = 1500.0;  // steepness
    double b_mw = 0.0022;      // center

    void validate() const;
};

// Power-splitting ratios. rho diverts power away from the information
// decoder; phi sub-splits the diverted power between DC harvesting (phi)
// and the AC computing supply (1 - phi).
struct SplitPair {
    double rho = 0.5;
    double phi = 0.5;

    // Throws domain error unless both ratios lie in the open interval (0,1).
    void validate() const;
};

struct NoiseModel {
    double sigma0_sq_mw = 7.943282347242815e-12;  // antenna noise (-111 dBm)
    double sigma1_sq_mw = 3162.2776601683795;     // decoder noise (35 dBm)

    void validate() const;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// Spectral efficiency in bps/Hz at received signal power `gain_mw`, with
// `rho` of the power diverted away from decoding.
double rate(double gain_mw, double rho, const NoiseModel &noise);

// Power delivered to the AC computing block: rho * (1 - phi) * gain.
double ac_supply_power(double gain_mw, const SplitPair &splits);

// Harvested DC power for a given pre-rectifier input power.
double eh_dc(double input_mw, const EhCurve &curve);

// Pre-rectifier power needed to harvest `target_mw`. Throws
// ErrorCode::infeasible_target when the target is at or above saturation.
double eh_dc_inverse(double target_mw, const EhCurve &curve);

} // namespace swipt
