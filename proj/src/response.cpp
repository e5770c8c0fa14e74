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

#include "chiral/response.hpp"

#include <array>

#include "chiral/steady_state.hpp"

namespace chiral {

namespace {

constexpr double kMinRcond = 1e-14;

constexpr std::array<int, 12> coherence_slots() {
    std::array<int, 12> slots{};
    int k = 0;
    for (int col = 1; col <= 4; ++col)
        for (int row = 1; row <= 4; ++row)
            if (row != col) slots[k++] = vec_index(row, col);
    return slots;
}

constexpr std::array<int, 4> population_slots() {
    return {vec_index(1, 1), vec_index(2, 2), vec_index(3, 3), vec_index(4, 4)};
}

using Matrix12 = Eigen::Matrix<Complex, 12, 12>;
using Vector12 = Eigen::Matrix<Complex, 12, 1>;

Matrix12 coherence_block(const Matrix16& m) {
    constexpr auto c = coherence_slots();
    Matrix12 out;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) out(i, j) = m(c[i], c[j]);
    return out;
}

Vector16 solve_on_coherences(const Matrix16& m, const Vector16& rhs, double delta) {
    constexpr auto c = coherence_slots();
    Vector12 b;
    for (int i = 0; i < 12; ++i) b(i) = rhs(c[i]);
    Eigen::PartialPivLU<Matrix12> lu(coherence_block(m));
    if (!(lu.rcond() > kMinRcond)) {
        throw SingularResponseError("singular coherence system", delta);
    }
    const Vector12 x = lu.solve(b);
    Vector16 out = Vector16::Zero();
    for (int i = 0; i < 12; ++i) out(c[i]) = x(i);
    return out;
}

Vector16 solve_traceless(const Matrix16& l, const Vector16& rhs, double delta) {
    Matrix16 a = l;
    Vector16 b = rhs;
    const int row = vec_index(1, 1);
    a.row(row) = vectorized_identity().transpose();
    b(row) = 0.0;
    Eigen::PartialPivLU<Matrix16> lu(a);
    if (!(lu.rcond() > kMinRcond)) {
        throw SingularResponseError("singular sideband system", delta);
    }
    return lu.solve(b);
}

}  // namespace

ResponseMatrix read_response(const Matrix4& electric_correction, const Matrix4& magnetic_correction) {
    return {electric_correction(3, 2), magnetic_correction(3, 2), electric_correction(1, 0),
            magnetic_correction(1, 0)};
}

ResponseMatrix sideband_response(const Liouvillian& l, const ProbeSuperops& probes,
                                 const DensityMatrix& rho0, Detuning delta) {
    const Vector16 r0 = rho0.vectorized();
    const Vector16 xe = solve_traceless(l.matrix, -(probes.electric * r0), delta.value);
    const Vector16 xh = solve_traceless(l.matrix, -(probes.magnetic * r0), delta.value);
    return read_response(unvectorize(xe), unvectorize(xh));
}

ResponseMatrix exact_response(const SchemeParams& p, Detuning delta) {
    const Liouvillian l = build_liouvillian(p, delta);
    const DensityMatrix rho0 = solve_steady_state(l);
    return sideband_response(l, build_probe_superops(p), rho0, delta);
}

Matrix4 weak_excitation_state(const SchemeParams& p) {
    const Liouvillian l0 = build_liouvillian(p, Detuning{0.0});
    Vector16 frozen = Vector16::Zero();
    frozen(vec_index(1, 1)) = 1.0;
    // Coherences driven by the frozen populations: L_cc x_c = -L_cp p.
    Vector16 source = -(l0.matrix * frozen);
    for (int s : population_slots()) source(s) = 0.0;
    Vector16 state = solve_on_coherences(l0.matrix, source, 0.0);
    state(vec_index(1, 1)) = 1.0;
    return unvectorize(state);
}

ResponseMatrix weak_excitation_response(const SchemeParams& p, Detuning delta) {
    const Liouvillian l = build_liouvillian(p, delta);
    const ProbeSuperops probes = build_probe_superops(p);
    const Vector16 r0 = vectorize(weak_excitation_state(p));
    const Vector16 xe = solve_on_coherences(l.matrix, -(probes.electric * r0), delta.value);
    const Vector16 xh = solve_on_coherences(l.matrix, -(probes.magnetic * r0), delta.value);
    return read_response(unvectorize(xe), unvectorize(xh));
}

ResponseCoefficients constitutive_coefficients(const ResponseMatrix& r, const SchemeParams& p) {
    const double k = p.kappa;
    return {p.eta * r.ee, p.eta * k * k * r.hh, p.eta * k * r.eh, p.eta * k * r.he};
}

}  // namespace chiral
