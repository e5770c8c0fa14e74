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

#include "chiral/core.hpp"

#include <cmath>
#include <string>

namespace chiral {

SchemeParams make_default_params() { return SchemeParams{}; }

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameters(what);
}

}  // namespace

void validate(const SchemeParams& p) {
    for (double v : {p.gamma, p.gamma2, p.omega13, p.omega42, p.eta, p.kappa, p.wavelength}) {
        require(std::isfinite(v), "parameters must be finite");
    }
    require(p.gamma > 0.0, "gamma must be positive");
    require(p.gamma2 >= 0.0, "gamma2 must be non-negative");
    require(p.omega13 >= 0.0, "omega13 must be non-negative");
    require(p.omega42 >= 0.0, "omega42 must be non-negative");
    require(p.eta >= 0.0, "eta must be non-negative");
    require(p.kappa >= 0.0 && p.kappa <= 1.0, "kappa must lie in [0, 1]");
    require(p.wavelength > 0.0, "wavelength must be positive");
}

SchemeParams nondimensionalize(const SchemeParams& p) {
    validate(p);
    if (is_nondimensional(p)) return p;
    SchemeParams out = p;
    out.gamma = 1.0;
    out.gamma2 = p.gamma2 / p.gamma;
    out.omega13 = p.omega13 / p.gamma;
    out.omega42 = p.omega42 / p.gamma;
    return out;
}

Vector16 vectorize(const Matrix4& m) {
    return Eigen::Map<const Vector16>(m.data());
}

Matrix4 unvectorize(const Vector16& v) {
    return Eigen::Map<const Matrix4>(v.data());
}

Vector16 vectorized_identity() { return vectorize(Matrix4::Identity()); }

Matrix4 projector(int row, int col) {
    Matrix4 m = Matrix4::Zero();
    m(row - 1, col - 1) = 1.0;
    return m;
}

DensityMatrix DensityMatrix::pure(int level) { return DensityMatrix(projector(level, level)); }

double DensityMatrix::trace_error() const { return std::abs(m_.trace() - 1.0); }

double DensityMatrix::hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix4 h = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double trace_tol, double herm_tol, double positivity_tol) const {
    return trace_error() <= trace_tol && hermiticity_error() <= herm_tol &&
           min_eigenvalue() >= -positivity_tol;
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace chiral
