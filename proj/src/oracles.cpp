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

#include "chiral/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chiral/liouvillian.hpp"
#include "chiral/steady_state.hpp"

namespace chiral::oracle {

namespace {

struct ProbeCoherences {
    Complex rho43;
    Complex rho21;
};

ProbeCoherences static_probe_state(const Liouvillian& base, const Matrix4& probe, double a) {
    Liouvillian l = base;
    l.matrix += commutator_superop(-0.5 * a * (probe + probe.adjoint()));
    const DensityMatrix rho = solve_steady_state(l, false);
    return {rho(4, 3), rho(2, 1)};
}

ProbeCoherences richardson_slope(const Liouvillian& base, const Matrix4& probe, double a) {
    auto slope = [&](double h) {
        const ProbeCoherences plus = static_probe_state(base, probe, h);
        const ProbeCoherences minus = static_probe_state(base, probe, -h);
        return ProbeCoherences{(plus.rho43 - minus.rho43) / (2.0 * h),
                               (plus.rho21 - minus.rho21) / (2.0 * h)};
    };
    const ProbeCoherences s1 = slope(a);
    const ProbeCoherences s2 = slope(2.0 * a);
    return {(4.0 * s1.rho43 - s2.rho43) / 3.0, (4.0 * s1.rho21 - s2.rho21) / 3.0};
}

}  // namespace

ResponseMatrix finite_difference_response(const SchemeParams& p, Detuning delta, double amplitude) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
    const Liouvillian base = build_liouvillian(p, delta);
    const ProbeCoherences e = richardson_slope(base, electric_probe_operator(), amplitude);
    const ProbeCoherences h = richardson_slope(base, magnetic_probe_operator(), amplitude);
    return {e.rho43, h.rho43, e.rho21, h.rho21};
}

namespace {

// y' = (L0 + a e^{-i w t} V+ + a e^{+i w t} V-) y for a 16 x cols block.
template <typename Block>
class OscillatingGenerator {
public:
    OscillatingGenerator(const Matrix16& l0, const Matrix4& probe, double a, double w)
        : l0_(l0),
          up_(a * commutator_superop(-0.5 * probe)),
          down_(a * commutator_superop(-0.5 * Matrix4(probe.adjoint()))),
          w_(w) {}

    Block operator()(double t, const Block& y) const {
        const Complex phase = std::exp(-kI * w_ * t);
        return l0_ * y + phase * (up_ * y) + std::conj(phase) * (down_ * y);
    }

private:
    Matrix16 l0_;
    Matrix16 up_;
    Matrix16 down_;
    double w_;
};

template <typename Block, typename F>
void rk4_step(const F& f, double t, double h, Block& y) {
    const Block k1 = f(t, y);
    const Block k2 = f(t + 0.5 * h, Block(y + 0.5 * h * k1));
    const Block k3 = f(t + 0.5 * h, Block(y + 0.5 * h * k2));
    const Block k4 = f(t + h, Block(y + h * k3));
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

ProbeCoherences oscillation_amplitude(const Matrix16& l0, const Matrix4& probe, double w,
                                      const OscillationSettings& s) {
    const double period = 2.0 * std::numbers::pi / std::abs(w);
    const double h = period / s.steps_per_period;

    // One-period propagator.
    const OscillatingGenerator<Matrix16> block_rhs(l0, probe, s.amplitude, w);
    Matrix16 monodromy = Matrix16::Identity();
    for (int k = 0; k < s.steps_per_period; ++k) rk4_step(block_rhs, k * h, h, monodromy);

    // Periodic orbit: trace-one fixed point of the propagator.
    Matrix16 a = monodromy - Matrix16::Identity();
    Vector16 b = Vector16::Zero();
    const int row = vec_index(1, 1);
    a.row(row) = vectorized_identity().transpose();
    b(row) = 1.0;
    Vector16 y = a.partialPivLu().solve(b);

    const OscillatingGenerator<Vector16> rhs(l0, probe, s.amplitude, w);
    Complex acc43{}, acc21{};
    const long total = static_cast<long>(s.periods) * s.steps_per_period;
    for (long k = 0; k < total; ++k) {
        // Steps restart at t = 0 each period so the phase stays exact.
        const double t = static_cast<double>(k % s.steps_per_period) * h;
        const Complex demod = std::exp(kI * w * t);
        acc43 += y(vec_index(4, 3)) * demod;
        acc21 += y(vec_index(2, 1)) * demod;
        rk4_step(rhs, t, h, y);
    }
    const double norm = static_cast<double>(total) * s.amplitude;
    return {acc43 / norm, acc21 / norm};
}

}  // namespace

ResponseMatrix oscillating_probe_response(const SchemeParams& p, Detuning delta,
                                          const OscillationSettings& settings) {
    if (delta.value == 0.0) throw std::invalid_argument("oscillating-probe oracle needs delta != 0");
    if (settings.periods < 1 || settings.steps_per_period < 16 || !(settings.amplitude > 0.0)) {
        throw std::invalid_argument("invalid oscillation settings");
    }
    // Drive-static frame: no detuning shift in the Hamiltonian.
    const Matrix16 l0 = build_liouvillian(p, Detuning{0.0}).matrix;
    const ProbeCoherences e = oscillation_amplitude(l0, electric_probe_operator(), delta.value, settings);
    const ProbeCoherences m = oscillation_amplitude(l0, magnetic_probe_operator(), delta.value, settings);
    return {e.rho43, m.rho43, e.rho21, m.rho21};
}

}  // namespace chiral::oracle
