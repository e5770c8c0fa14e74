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

#ifndef CHIRAL_STEADY_STATE_HPP
#define CHIRAL_STEADY_STATE_HPP

#include <cstddef>
#include <stdexcept>

#include "chiral/core.hpp"
#include "chiral/liouvillian.hpp"

namespace chiral {

class SteadyStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of singular values of L below rel_tol * (largest singular value).
std::size_t null_space_dimension(const Liouvillian& l, double rel_tol = 1e-8);

/// Largest |(vec I)^dag L| entry; zero for a trace-preserving generator.
double trace_leak(const Matrix16& l);

/**
 * Stationary state of L with unit trace.
 *
 * The (1,1) equation of L vec(rho) = 0 is replaced by the trace condition and
 * the resulting square system is solved by LU. With check_uniqueness the null
 * space is first verified to be one-dimensional.
 */
DensityMatrix solve_steady_state(const Liouvillian& l, bool check_uniqueness = true);

/// max |L vec(rho)|, in units of gamma.
double steady_state_residual(const Liouvillian& l, const DensityMatrix& rho);

/**
 * Integrates d rho/dt = L rho with classical fourth-order Runge-Kutta at a
 * fixed step. Requires dt * ||L||_inf < 0.1; throws SteadyStateError when
 * the trace drifts by more than 1e-6.
 */
DensityMatrix time_evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0, double t_max,
                                 double dt);

}  // namespace chiral

#endif  // CHIRAL_STEADY_STATE_HPP
