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

#ifndef CHIRAL_LIOUVILLIAN_HPP
#define CHIRAL_LIOUVILLIAN_HPP

#include <array>
#include <span>

#include "chiral/core.hpp"

namespace chiral {

/**
 * Level structure and frame.
 *
 * Energies are ordered E1 < E3 < E4 with E2 = E4 - omega_d2, and the two probe
 * transitions share the frequency omega_34 = omega_12. The drives are
 * resonant (omega_d1 = omega_31, omega_d2 = omega_42 = omega_31). In the frame
 * rotating at (0, omega, omega_d1, omega_d1 + omega), with omega the probe
 * frequency, every field term is static: the drives and both probe couplings
 * lose their time dependence and the probe detuning appears as the diagonal
 * shift -delta (|2><2| + |4><4|).
 *
 * Both probe couplings carry the factor e^{-i delta t} in the frame where only
 * the drives are static; the oscillating-probe oracle integrates in that frame.
 */

/// Probe-free, drive-resonant Hamiltonian in units of gamma.
struct Hamiltonian4 {
    Matrix4 matrix = Matrix4::Zero();
};

/// One Lindblad channel: jump operator and its rate.
struct DecayChannel {
    Matrix4 jump = Matrix4::Zero();
    double rate = 0.0;
};

using DecayChannels = std::array<DecayChannel, 3>;

/// 16x16 generator acting on the column-major vectorized density matrix.
struct Liouvillian {
    Matrix16 matrix = Matrix16::Zero();

    Vector16 apply(const Vector16& v) const { return matrix * v; }
};

/// Probe couplings as commutator superoperators at unit Rabi amplitude.
struct ProbeSuperops {
    Matrix16 electric = Matrix16::Zero();  ///< -i[h_E, .], h_E = -(1/2)|4><3|
    Matrix16 magnetic = Matrix16::Zero();  ///< -i[h_H, .], h_H = -(1/2)|2><1|
};

// Superoperator building blocks for column-major vectorization.
Matrix16 left_multiplication(const Matrix4& a);   // X -> A X
Matrix16 right_multiplication(const Matrix4& a);  // X -> X A
Matrix16 commutator_superop(const Matrix4& h);    // X -> -i [H, X]
Matrix16 dissipator_superop(const Matrix4& jump, double rate);

/// H = -(omega13/2)(|1><3| + |3><1|) - (omega42/2)(|4><2| + |2><4|).
Hamiltonian4 build_hamiltonian(const SchemeParams& p);

/// Decay |3>->|1> and |4>->|1> at gamma, |2>->|1> at gamma2.
DecayChannels build_dissipators(const SchemeParams& p);

/// Diagonal frame shift carrying the probe detuning.
Matrix4 detuning_hamiltonian(Detuning delta);

Liouvillian assemble_liouvillian(const Hamiltonian4& h, std::span<const DecayChannel> channels,
                                 Detuning delta);

/// Convenience: nondimensionalizes p and assembles L(delta).
Liouvillian build_liouvillian(const SchemeParams& p, Detuning delta);

/// Positive-frequency probe operators (without the -1/2 Rabi factor).
Matrix4 electric_probe_operator();
Matrix4 magnetic_probe_operator();

ProbeSuperops build_probe_superops(const SchemeParams& p);

}  // namespace chiral

#endif  // CHIRAL_LIOUVILLIAN_HPP
