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

#ifndef CHIRAL_RESPONSE_HPP
#define CHIRAL_RESPONSE_HPP

#include <stdexcept>
#include <string>

#include "chiral/core.hpp"
#include "chiral/liouvillian.hpp"

namespace chiral {

/**
 * First-order coherence responses per unit probe Rabi amplitude.
 *
 * The polarization is read from rho_43 and the magnetization from rho_21,
 * the coherences that co-rotate with the positive-frequency probe. With this
 * orientation the drives-off magnetic response 0.5 i / (gamma2/2 - i delta)
 * is absorptive.
 */
struct ResponseMatrix {
    Complex ee{};  ///< rho_43 per unit electric probe
    Complex eh{};  ///< rho_43 per unit magnetic probe
    Complex he{};  ///< rho_21 per unit electric probe
    Complex hh{};  ///< rho_21 per unit magnetic probe
};

/// A sideband or restricted system that cannot be solved at this detuning.
class SingularResponseError : public std::runtime_error {
public:
    SingularResponseError(const std::string& what, double detuning)
        : std::runtime_error(what + " at delta = " + std::to_string(detuning)), detuning_(detuning) {}

    double detuning() const { return detuning_; }

private:
    double detuning_;
};

/// Reads the four probe coherences out of the two first-order corrections.
ResponseMatrix read_response(const Matrix4& electric_correction, const Matrix4& magnetic_correction);

/**
 * Solves L(delta) x = -V rho0 for both probes.
 *
 * L(delta) is singular with rho0 spanning its kernel; the source is traceless
 * so the system is consistent and the returned correction is fixed by
 * Tr x = 0. `delta` is only used for error reporting.
 */
ResponseMatrix sideband_response(const Liouvillian& l, const ProbeSuperops& probes,
                                 const DensityMatrix& rho0, Detuning delta = Detuning{});

/// Probe-free steady state followed by the sideband solve.
ResponseMatrix exact_response(const SchemeParams& p, Detuning delta);

/**
 * Zeroth-order state of the weak-excitation treatment: populations frozen at
 * rho_11 = 1, coherences from the 12-dimensional coherence block of L.
 * Not positive in general.
 */
Matrix4 weak_excitation_state(const SchemeParams& p);

/**
 * Response with populations frozen at rho_11 = 1: both the zeroth-order state
 * and the first-order sideband are solved on the coherence subspace only.
 */
ResponseMatrix weak_excitation_response(const SchemeParams& p, Detuning delta);

/// chi_e = eta r_ee, xi_eh = eta kappa r_eh, xi_he = eta kappa r_he, chi_m = eta kappa^2 r_hh.
ResponseCoefficients constitutive_coefficients(const ResponseMatrix& r, const SchemeParams& p);

}  // namespace chiral

#endif  // CHIRAL_RESPONSE_HPP
