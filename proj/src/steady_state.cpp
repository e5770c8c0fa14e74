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

#include "chiral/steady_state.hpp"

#include <cmath>
#include <string>

namespace chiral {

std::size_t null_space_dimension(const Liouvillian& l, double rel_tol) {
    Eigen::JacobiSVD<Matrix16> svd(l.matrix);
    const auto& s = svd.singularValues();
    const double cutoff = rel_tol * s.maxCoeff();
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) < cutoff) ++n;
    return n;
}

double trace_leak(const Matrix16& l) {
    return (vectorized_identity().adjoint() * l).cwiseAbs().maxCoeff();
}

DensityMatrix solve_steady_state(const Liouvillian& l, bool check_uniqueness) {
    if (check_uniqueness) {
        const std::size_t dim = null_space_dimension(l);
        if (dim != 1) {
            throw SteadyStateError("steady state is not unique: null space dimension " +
                                   std::to_string(dim));
        }
    }
    Matrix16 a = l.matrix;
    Vector16 b = Vector16::Zero();
    const int row = vec_index(1, 1);
    a.row(row) = vectorized_identity().transpose();
    b(row) = 1.0;

    Eigen::PartialPivLU<Matrix16> lu(a);
    if (!(lu.rcond() > 1e-14)) throw SteadyStateError("steady-state system is singular");
    return DensityMatrix::from_vector(lu.solve(b));
}

double steady_state_residual(const Liouvillian& l, const DensityMatrix& rho) {
    return (l.matrix * rho.vectorized()).cwiseAbs().maxCoeff();
}

DensityMatrix time_evolve_oracle(const Liouvillian& l, const DensityMatrix& rho0, double t_max,
                                 double dt) {
    if (!(dt > 0.0) || !(t_max >= 0.0)) throw std::invalid_argument("need dt > 0 and t_max >= 0");
    const double norm = l.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    if (dt * norm >= 0.1) throw std::invalid_argument("time step too large for this generator");

    const Matrix16& m = l.matrix;
    Vector16 y = rho0.vectorized();
    const Complex trace0 = rho0.trace();
    const auto steps = static_cast<long>(std::ceil(t_max / dt - 1e-9));
    const double h = steps > 0 ? t_max / static_cast<double>(steps) : 0.0;
    for (long s = 0; s < steps; ++s) {
        const Vector16 k1 = m * y;
        const Vector16 k2 = m * (y + 0.5 * h * k1);
        const Vector16 k3 = m * (y + 0.5 * h * k2);
        const Vector16 k4 = m * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (s % 1024 == 0 && std::abs(unvectorize(y).trace() - trace0) > 1e-6) {
            throw SteadyStateError("trace drift during time integration; reduce dt");
        }
    }
    if (std::abs(unvectorize(y).trace() - trace0) > 1e-6) {
        throw SteadyStateError("trace drift during time integration; reduce dt");
    }
    return DensityMatrix::from_vector(y);
}

}  // namespace chiral
