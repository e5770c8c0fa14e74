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

#include "chiral/optics.hpp"
#include "chiral/response.hpp"
#include "chiral/sweep.hpp"
#include "test_support.hpp"

using namespace chiral;
using chiral::testing::ParamGenerator;
using chiral::testing::reference_params;

namespace {

ResponseCoefficients from_eps_mu(Complex eps, Complex mu, Complex xi_eh = {}, Complex xi_he = {}) {
    return {eps - 1.0, mu - 1.0, xi_eh, xi_he};
}

}  // namespace

TEST(ChiralIndex, Vacuum) { EXPECT_EQ(chiral_index({}), Complex(1.0)); }

TEST(ChiralIndex, LosslessDielectric) {
    EXPECT_NEAR(std::abs(chiral_index(from_eps_mu(4.0, 1.0)) - Complex(2.0)), 0.0, 1e-14);
}

TEST(ChiralIndex, AntisymmetricChirality) {
    const Complex n = chiral_index(from_eps_mu(1.0, 1.0, Complex(0.0, 0.2), Complex(0.0, -0.2)));
    EXPECT_NEAR(std::abs(n - Complex(0.8)), 0.0, 1e-14);
}

TEST(ChiralIndex, SymmetricChirality) {
    for (Complex xi : {Complex(0.3), Complex(0.1, 0.05), Complex(0.0, 0.4)}) {
        const Complex n = chiral_index(from_eps_mu(1.0, 1.0, xi, xi));
        EXPECT_NEAR(std::abs(n - passive_sqrt(1.0 - xi * xi)), 0.0, 1e-14);
    }
}

TEST(ChiralIndex, PassiveInputsGivePassiveIndex) {
    ParamGenerator gen(51);
    for (int i = 0; i < 1000; ++i) {
        const Complex chi_e(gen.uniform(-10.0, 10.0), gen.uniform(0.0, 5.0));
        const Complex chi_m(gen.uniform(-10.0, 10.0), gen.uniform(0.0, 5.0));
        EXPECT_GE(chiral_index({chi_e, chi_m, {}, {}}).imag(), 0.0);
    }
}

TEST(ChiralIndex, NegativeIndexIsReachable) {
    // eps = mu = -1 + small loss: n ~ -1 on the passive branch.
    const Complex n = chiral_index(from_eps_mu(Complex(-1.0, 0.01), Complex(-1.0, 0.01)));
    EXPECT_LT(n.real(), -0.9);
    EXPECT_GT(n.imag(), 0.0);
}

TEST(NonchiralIndex, ReducesToChiralWithoutCrossTerms) {
    ParamGenerator gen(52);
    for (int i = 0; i < 100; ++i) {
        const ResponseCoefficients c{{gen.uniform(-2.0, 2.0), gen.uniform(0.0, 1.0)},
                                     {gen.uniform(-2.0, 2.0), gen.uniform(0.0, 1.0)}, {}, {}};
        EXPECT_LE(std::abs(chiral_index(c) - nonchiral_index(c)), 1e-12);
    }
}

TEST(NonchiralIndex, Arithmetic) {
    EXPECT_NEAR(std::abs(nonchiral_index({3.0, 0.0, {}, {}}) - Complex(2.0)), 0.0, 1e-14);
    // Without drives only the two-level magnetic term remains.
    SchemeParams p = reference_params();
    p.omega13 = p.omega42 = 0.0;
    const ResponseMatrix r = exact_response(p, Detuning{0.001});
    const ResponseCoefficients c = constitutive_coefficients(r, p);
    const Complex chi_m_eff = p.eta * p.kappa * p.kappa * r.hh;
    EXPECT_LE(std::abs(nonchiral_index(c) - passive_sqrt(1.0 + chi_m_eff)), 1e-14);
}

TEST(NonchiralIndex, DiffersFromChiralWhenBothDrivesAreOn) {
    const SchemeParams p = reference_params();
    const ResponseCoefficients c = constitutive_coefficients(exact_response(p, Detuning{0.5}), p);
    EXPECT_GT(std::abs(c.xi_eh), 0.0);
    EXPECT_GT(std::abs(chiral_index(c) - nonchiral_index(c)), 1e-8);
}

TEST(FigureOfMerit, Values) {
    EXPECT_DOUBLE_EQ(figure_of_merit({1.0, 1.0}), 1.0);
    EXPECT_EQ(figure_of_merit({0.8, 0.0}), kLosslessFom);
    EXPECT_TRUE(std::isinf(figure_of_merit({0.8, 0.0})));
    EXPECT_DOUBLE_EQ(figure_of_merit({-1.2, 0.4}), 3.0);
}

TEST(OpticalPoint, Consistency) {
    const SchemeParams p = reference_params();
    const ResponseCoefficients c = constitutive_coefficients(exact_response(p, Detuning{-1.0}), p);
    const OpticalPoint o = evaluate_optics(c);
    EXPECT_EQ(o.epsilon, 1.0 + c.chi_e);
    EXPECT_EQ(o.mu, 1.0 + c.chi_m);
    EXPECT_EQ(o.n_chiral, chiral_index(c));
    EXPECT_EQ(o.fom, std::abs(o.n_chiral.real()) / std::abs(o.n_chiral.imag()));
}

TEST(ChiralIndex, ContinuousAlongReferenceSweep) {
    SweepSpec spec;
    spec.params = make_default_params();
    spec.num_points = 2001;
    const auto rows = run_sweep(spec, 1);
    ASSERT_EQ(rows.size(), 2001u);
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        // A branch jump would be O(1) while neighbouring steps are smooth.
        const double step = std::abs(rows[i].n - rows[i - 1].n);
        const double local = 0.5 * (std::abs(rows[i + 1].n - rows[i - 1].n));
        EXPECT_LE(step, 10.0 * local + 1e-12) << "delta " << rows[i].delta;
    }
}
