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

#include <cmath>

#include <gtest/gtest.h>

#include "chiral/oracles.hpp"
#include "chiral/response.hpp"
#include "chiral/steady_state.hpp"
#include "test_support.hpp"

using namespace chiral;
using chiral::testing::ParamGenerator;
using chiral::testing::reference_params;

namespace {

// Two-level |1>-|2> coherence driven by -(1/2)|2><1| with rho = |1><1|:
// d rho_21/dt = -(gamma2/2 - i delta) rho_21 + i/2 in the probe-static frame.
Complex two_level_magnetic(double gamma2, double delta) {
    return Complex(0.0, 0.5) / Complex(gamma2 / 2.0, -delta);
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

double max_relative_error(const ResponseMatrix& got, const ResponseMatrix& want) {
    return std::max({rel(got.ee, want.ee), rel(got.eh, want.eh), rel(got.he, want.he), rel(got.hh, want.hh)});
}

double max_abs_diff(const ResponseMatrix& a, const ResponseMatrix& b) {
    return std::max({std::abs(a.ee - b.ee), std::abs(a.eh - b.eh), std::abs(a.he - b.he),
                     std::abs(a.hh - b.hh)});
}

}  // namespace

TEST(SidebandResponse, DrivesOffIsTwoLevelMagneticLine) {
    SchemeParams p = reference_params();
    p.omega13 = p.omega42 = 0.0;
    for (double d : {-3.0, -1e-4, 0.0, 2e-5, 0.7}) {
        const ResponseMatrix r = exact_response(p, Detuning{d});
        EXPECT_EQ(r.ee, Complex(0.0));
        EXPECT_EQ(r.eh, Complex(0.0));
        EXPECT_EQ(r.he, Complex(0.0));
        EXPECT_LE(rel(r.hh, two_level_magnetic(p.gamma2, d)), 1e-10) << "delta " << d;
        // The bare magnetic line saturates at probe amplitudes ~ gamma2.
        EXPECT_LE(rel(oracle::finite_difference_response(p, Detuning{d}, 1e-8).hh,
                      two_level_magnetic(p.gamma2, d)),
                  1e-6);
    }
    // Absorptive orientation.
    EXPECT_GT(exact_response(p, Detuning{0.0}).hh.imag(), 0.0);
}

TEST(SidebandResponse, BrokenLoopHasNoCrossResponse) {
    SchemeParams p = reference_params();
    p.omega42 = 0.0;
    for (double d : {-5.0, -0.5, 0.0, 0.01, 3.0}) {
        const ResponseMatrix r = exact_response(p, Detuning{d});
        EXPECT_LE(std::abs(r.eh), 1e-12);
        EXPECT_LE(std::abs(r.he), 1e-12);
        EXPECT_GT(std::abs(r.ee), 1e-3);
    }
}

TEST(SidebandResponse, CrossResponseNeedsBothDrives) {
    const ResponseMatrix r = exact_response(reference_params(), Detuning{0.5});
    EXPECT_GT(std::abs(r.eh), 1e-6);
    EXPECT_GT(std::abs(r.he), 1e-6);
}

TEST(SidebandResponse, MatchesFiniteDifferenceOracle) {
    const SchemeParams p = reference_params();
    // delta = 0 is the reference point; the probe-static frame makes the
    // oracle valid elsewhere too.
    for (double d : {0.0, -2.0, 0.004, 7.5}) {
        const ResponseMatrix fast = exact_response(p, Detuning{d});
        const ResponseMatrix slow = oracle::finite_difference_response(p, Detuning{d});
        EXPECT_LE(rel(fast.ee, slow.ee), 1e-6) << d;
        EXPECT_LE(rel(fast.eh, slow.eh), 1e-6) << d;
        EXPECT_LE(rel(fast.he, slow.he), 1e-6) << d;
        EXPECT_LE(rel(fast.hh, slow.hh), 1e-6) << d;
    }
}

TEST(SidebandResponse, MatchesOscillatingProbeOracle) {
    const SchemeParams p = reference_params();
    oracle::OscillationSettings s;
    s.periods = 10;
    s.steps_per_period = 2000;
    for (double d : {2.0, -1.3}) {
        const ResponseMatrix fast = exact_response(p, Detuning{d});
        s.amplitude = 1e-5;
        const ResponseMatrix weak_probe = oracle::oscillating_probe_response(p, Detuning{d}, s);
        s.amplitude = 1e-4;
        const ResponseMatrix strong_probe = oracle::oscillating_probe_response(p, Detuning{d}, s);
        const double err_weak = max_relative_error(fast, weak_probe);
        const double err_strong = max_relative_error(fast, strong_probe);
        EXPECT_LE(err_weak, 1e-6) << d;
        // The residual is saturation of the long-lived |2>: it scales as amplitude^2.
        EXPECT_NEAR(err_strong / err_weak, 100.0, 20.0) << d;
    }
    EXPECT_THROW(oracle::oscillating_probe_response(p, Detuning{0.0}), std::invalid_argument);
}

TEST(WeakExcitation, ExactWhenNothingIsExcited) {
    SchemeParams p = reference_params();
    p.omega13 = p.omega42 = 0.0;
    for (double d : {-2.0, 0.0, 1e-3}) {
        EXPECT_LE(max_abs_diff(weak_excitation_response(p, Detuning{d}), exact_response(p, Detuning{d})),
                  1e-12);
    }
}

TEST(WeakExcitation, FrozenStateHasUnitGroundPopulation) {
    const Matrix4 rho = weak_excitation_state(reference_params());
    EXPECT_EQ(rho(0, 0), Complex(1.0));
    for (int k = 1; k < 4; ++k) EXPECT_EQ(rho(k, k), Complex(0.0));
    EXPECT_GT(std::abs(rho(2, 0)), 0.1);  // drive-induced 1-3 coherence survives
}

TEST(WeakExcitation, ShowsGainAtReferenceParameters) {
    const SchemeParams p = reference_params();
    double min_im = INFINITY;
    for (int i = 0; i <= 400; ++i) {
        const double d = -20.0 + 0.1 * i;
        min_im = std::min(min_im, constitutive_coefficients(weak_excitation_response(p, Detuning{d}), p).chi_e.imag());
    }
    EXPECT_LT(min_im, -1e-6);
}

TEST(WeakExcitation, ConvergesQuadraticallyInDrive) {
    SchemeParams p = reference_params();
    auto error = [&](double omega13) {
        p.omega13 = omega13;
        double worst = 0.0;
        for (double d : {-3.0, -0.5, 0.0, 0.02, 1.0, 4.0}) {
            worst = std::max(worst, max_abs_diff(weak_excitation_response(p, Detuning{d}),
                                                 exact_response(p, Detuning{d})));
        }
        return worst;
    };
    // On the magnetic resonance the asymptotic regime needs omega13^2 well
    // below the omega42 dressing, hence the small drives.
    const double e1 = error(2e-3);
    const double e2 = error(1e-3);
    const double e3 = error(5e-4);
    EXPECT_NEAR(e1 / e2, 4.0, 0.2);
    EXPECT_NEAR(e2 / e3, 4.0, 0.2);
}

TEST(Coefficients, EmptyMedium) {
    SchemeParams p = reference_params();
    p.eta = 0.0;
    const ResponseCoefficients c = constitutive_coefficients(exact_response(p, Detuning{0.3}), p);
    EXPECT_EQ(c.chi_e, Complex(0.0));
    EXPECT_EQ(c.chi_m, Complex(0.0));
    EXPECT_EQ(c.xi_eh, Complex(0.0));
    EXPECT_EQ(c.xi_he, Complex(0.0));
}

TEST(Coefficients, NoMagneticCoupling) {
    SchemeParams p = reference_params();
    const ResponseMatrix r = exact_response(p, Detuning{0.3});
    const Complex chi_e = constitutive_coefficients(r, p).chi_e;
    p.kappa = 0.0;
    const ResponseCoefficients c = constitutive_coefficients(r, p);
    EXPECT_EQ(c.chi_m, Complex(0.0));
    EXPECT_EQ(c.xi_eh, Complex(0.0));
    EXPECT_EQ(c.xi_he, Complex(0.0));
    EXPECT_EQ(c.chi_e, chi_e);
}

TEST(Coefficients, LinearInMediumStrength) {
    ParamGenerator gen(41);
    for (int i = 0; i < 20; ++i) {
        SchemeParams p = gen.next();
        const ResponseMatrix r = exact_response(p, Detuning{gen.uniform(-5.0, 5.0)});
        const ResponseCoefficients one = constitutive_coefficients(r, p);
        p.eta *= 2.0;
        const ResponseCoefficients two = constitutive_coefficients(r, p);
        EXPECT_EQ(two.chi_e, 2.0 * one.chi_e);
        EXPECT_EQ(two.chi_m, 2.0 * one.chi_m);
        EXPECT_EQ(two.xi_eh, 2.0 * one.xi_eh);
        EXPECT_EQ(two.xi_he, 2.0 * one.xi_he);
    }
}

TEST(Coefficients, MagneticCalibrationOfKappa) {
    // chi_m = i eta kappa^2 / gamma2 on resonance with drives off, and
    // kappa^2 = gamma2 / gamma in the reference configuration.
    SchemeParams p = reference_params();
    p.omega13 = p.omega42 = 0.0;
    const ResponseCoefficients c = constitutive_coefficients(exact_response(p, Detuning{0.0}), p);
    EXPECT_NEAR(c.chi_m.real(), 0.0, 1e-12);
    EXPECT_NEAR(c.chi_m.imag(), 1.0, 1e-10);
}

TEST(Coefficients, ElectricResponseIsPassive) {
    ParamGenerator gen(42);
    for (int i = 0; i < 300; ++i) {
        const SchemeParams p = gen.next();
        const double d = gen.uniform(-100.0, 100.0);
        const ResponseCoefficients c = constitutive_coefficients(exact_response(p, Detuning{d}), p);
        EXPECT_GE(c.chi_e.imag(), -1e-10) << "omega13 " << p.omega13 << " omega42 " << p.omega42
                                          << " delta " << d;
    }
}

TEST(Coefficients, CrossNullWhenEitherDriveIsOff) {
    ParamGenerator gen(43);
    for (int i = 0; i < 50; ++i) {
        SchemeParams p = gen.next();
        (i % 2 ? p.omega13 : p.omega42) = 0.0;
        const double d = gen.uniform(-20.0, 20.0);
        for (const ResponseMatrix& r : {exact_response(p, Detuning{d}), weak_excitation_response(p, Detuning{d})}) {
            const ResponseCoefficients c = constitutive_coefficients(r, p);
            EXPECT_LE(std::abs(c.xi_eh), 1e-12);
            EXPECT_LE(std::abs(c.xi_he), 1e-12);
        }
    }
}
