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

#include "chiral/liouvillian.hpp"

#include <cmath>

namespace chiral {

namespace {

void require_nondimensional(const SchemeParams& p) {
    validate(p);
    if (!is_nondimensional(p)) {
        throw InvalidParameters("parameters must be expressed in units of gamma");
    }
}

}  // namespace

Matrix16 left_multiplication(const Matrix4& a) {
    // vec(A X) = (I kron A) vec(X)
    Matrix16 s = Matrix16::Zero();
    for (int k = 0; k < 4; ++k) s.block<4, 4>(4 * k, 4 * k) = a;
    return s;
}

Matrix16 right_multiplication(const Matrix4& a) {
    // vec(X A) = (A^T kron I) vec(X)
    Matrix16 s = Matrix16::Zero();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            s.block<4, 4>(4 * r, 4 * c) = a(c, r) * Matrix4::Identity();
    return s;
}

Matrix16 commutator_superop(const Matrix4& h) {
    return -kI * (left_multiplication(h) - right_multiplication(h));
}

Matrix16 dissipator_superop(const Matrix4& jump, double rate) {
    const Matrix4 n = jump.adjoint() * jump;
    return rate * (left_multiplication(jump) * right_multiplication(jump.adjoint()) -
                   0.5 * left_multiplication(n) - 0.5 * right_multiplication(n));
}

Hamiltonian4 build_hamiltonian(const SchemeParams& p) {
    require_nondimensional(p);
    Hamiltonian4 h;
    h.matrix = -0.5 * p.omega13 * (projector(1, 3) + projector(3, 1)) -
               0.5 * p.omega42 * (projector(4, 2) + projector(2, 4));
    return h;
}

DecayChannels build_dissipators(const SchemeParams& p) {
    require_nondimensional(p);
    return {DecayChannel{projector(1, 3), p.gamma}, DecayChannel{projector(1, 4), p.gamma},
            DecayChannel{projector(1, 2), p.gamma2}};
}

Matrix4 detuning_hamiltonian(Detuning delta) {
    return -delta.value * (projector(2, 2) + projector(4, 4));
}

Liouvillian assemble_liouvillian(const Hamiltonian4& h, std::span<const DecayChannel> channels,
                                 Detuning delta) {
    if (!std::isfinite(delta.value)) throw InvalidParameters("detuning must be finite");
    Liouvillian l;
    l.matrix = commutator_superop(h.matrix + detuning_hamiltonian(delta));
    for (const auto& ch : channels) {
        if (ch.rate < 0.0) throw InvalidParameters("decay rates must be non-negative");
        if (ch.rate > 0.0) l.matrix += dissipator_superop(ch.jump, ch.rate);
    }
    return l;
}

Liouvillian build_liouvillian(const SchemeParams& p, Detuning delta) {
    const SchemeParams q = nondimensionalize(p);
    const DecayChannels channels = build_dissipators(q);
    return assemble_liouvillian(build_hamiltonian(q), channels, delta);
}

Matrix4 electric_probe_operator() { return projector(4, 3); }
Matrix4 magnetic_probe_operator() { return projector(2, 1); }

ProbeSuperops build_probe_superops(const SchemeParams& p) {
    validate(p);
    return {commutator_superop(-0.5 * electric_probe_operator()),
            commutator_superop(-0.5 * magnetic_probe_operator())};
}

}  // namespace chiral
