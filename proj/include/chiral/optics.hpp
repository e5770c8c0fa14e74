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

#ifndef CHIRAL_OPTICS_HPP
#define CHIRAL_OPTICS_HPP

#include <limits>

#include "chiral/core.hpp"

namespace chiral {

/// Returned by figure_of_merit for a lossless index.
inline constexpr double kLosslessFom = std::numeric_limits<double>::infinity();

/// Square root on the branch with non-negative imaginary part.
Complex passive_sqrt(Complex z);

/// n = sqrt(eps mu - (xi_eh + xi_he)^2 / 4) + (i/2)(xi_eh - xi_he), eps = 1 + chi_e, mu = 1 + chi_m.
Complex chiral_index(const ResponseCoefficients& c);

/// Magnetic susceptibility when the E-driven magnetization is folded into mu.
inline Complex effective_chi_m(const ResponseCoefficients& c) { return c.chi_m + c.xi_he; }

/// n = sqrt(eps (1 + chi_m + xi_he)): chirality absorbed into mu, xi_eh ignored.
Complex nonchiral_index(const ResponseCoefficients& c);

/// |Re n| / |Im n|; kLosslessFom when Im n == 0.
double figure_of_merit(Complex n);

struct OpticalPoint {
    Complex epsilon{1.0, 0.0};
    Complex mu{1.0, 0.0};
    Complex n_chiral{1.0, 0.0};
    Complex n_nonchiral{1.0, 0.0};
    double fom = kLosslessFom;
};

OpticalPoint evaluate_optics(const ResponseCoefficients& c);

}  // namespace chiral

#endif  // CHIRAL_OPTICS_HPP
