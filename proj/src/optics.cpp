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

#include "chiral/optics.hpp"

#include <cmath>

namespace chiral {

Complex passive_sqrt(Complex z) {
    const Complex s = std::sqrt(z);
    return s.imag() < 0.0 ? -s : s;
}

Complex chiral_index(const ResponseCoefficients& c) {
    const Complex eps = 1.0 + c.chi_e;
    const Complex mu = 1.0 + c.chi_m;
    const Complex sum = c.xi_eh + c.xi_he;
    return passive_sqrt(eps * mu - 0.25 * sum * sum) + 0.5 * kI * (c.xi_eh - c.xi_he);
}

Complex nonchiral_index(const ResponseCoefficients& c) {
    return passive_sqrt((1.0 + c.chi_e) * (1.0 + effective_chi_m(c)));
}

double figure_of_merit(Complex n) {
    if (n.imag() == 0.0) return kLosslessFom;
    return std::abs(n.real()) / std::abs(n.imag());
}

OpticalPoint evaluate_optics(const ResponseCoefficients& c) {
    OpticalPoint o;
    o.epsilon = 1.0 + c.chi_e;
    o.mu = 1.0 + c.chi_m;
    o.n_chiral = chiral_index(c);
    o.n_nonchiral = nonchiral_index(c);
    o.fom = figure_of_merit(o.n_chiral);
    return o;
}

}  // namespace chiral
