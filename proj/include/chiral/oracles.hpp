// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHIRAL_ORACLES_HPP
#define CHIRAL_ORACLES_HPP

#include "chiral/core.hpp"
#include "chiral/response.hpp"

namespace chiral::oracle {

/**
 * Response from static probes of finite amplitude.
 *
 * The full Liouvillian including a Hermitian probe coupling of amplitude +-a
 * and +-2a is solved for its steady state; the slopes of rho_43 and rho_21
 * are formed by central differences and Richardson-extrapolated. In the
 * probe-static frame this is valid at every detuning.
 */
ResponseMatrix finite_difference_response(const SchemeParams& p, Detuning delta,
                                          double amplitude = 1e-4);

struct OscillationSettings {
    double amplitude = 1e-4;
    int periods = 50;
    int steps_per_period = 4000;
};

/**
 * Response from integrating the time-dependent master equation in the frame
 * where only the drives are static, so the probe oscillates as e^{-i delta t}.
 *
 * The periodic steady state is located as the trace-one fixed point of the
 * one-period RK4 propagator, then integrated for `periods` further periods
 * while the e^{-i delta t} Fourier component of rho_43 and rho_21 is
 * accumulated. Requires delta != 0.
 */
ResponseMatrix oscillating_probe_response(const SchemeParams& p, Detuning delta,
                                          const OscillationSettings& settings = {});

}  // namespace chiral::oracle

#endif  // CHIRAL_ORACLES_HPP
