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

#ifndef CHIRAL_CORE_HPP
#define CHIRAL_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace chiral {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

inline constexpr Complex kI{0.0, 1.0};

/// Thrown when a parameter set violates its invariants.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Physical parameters of the driven four-level scheme.
 *
 * Levels are numbered 1..4 as in the usual diagram: |1> is the ground state,
 * the strong drives couple |1>-|3> and |4>-|2>, the electric probe couples
 * |3>-|4> and the magnetic probe couples |1>-|2>. Rates and Rabi frequencies
 * are angular frequencies in s^-1 until nondimensionalize() rescales them to
 * units of gamma.
 */
struct SchemeParams {
    double gamma = 1.0e7;                   ///< decay rate of |3> and |4>
    double gamma2 = 1.0e7 / (137.0 * 137.0); ///< decay rate of |2>
    double omega13 = 1.0e7;                 ///< drive Rabi frequency on |1>-|3>
    double omega42 = 1.0e5;                 ///< drive Rabi frequency on |4>-|2>
    double eta = 1.0;                       ///< dimensionless medium strength
    double kappa = 1.0 / 137.0;             ///< magnetic/electric coupling ratio
    double wavelength = 600.0e-9;           ///< probe wavelength in m (informational)

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Parameter set of the reference configuration (gamma = 1e7 s^-1,
/// gamma2 = gamma/137^2, omega13 = gamma, omega42 = gamma/100).
SchemeParams make_default_params();

/// Throws InvalidParameters when any invariant of SchemeParams is violated.
void validate(const SchemeParams& p);

/// Expresses all rates in units of gamma. Idempotent.
SchemeParams nondimensionalize(const SchemeParams& p);

inline bool is_nondimensional(const SchemeParams& p) { return p.gamma == 1.0; }

/// Common probe detuning delta = omega - omega_34 = omega - omega_12, in units of gamma.
struct Detuning {
    double value = 0.0;

    constexpr Detuning() = default;
    constexpr explicit Detuning(double v) : value(v) {}
};

/// Column-major position of element (row, col) of a 4x4 matrix, 1-based levels.
constexpr int vec_index(int row, int col) { return (col - 1) * 4 + (row - 1); }

Vector16 vectorize(const Matrix4& m);
Matrix4 unvectorize(const Vector16& v);

/// Vectorized identity; its adjoint is the trace functional.
Vector16 vectorized_identity();

/// Outer product |row><col| for 1-based levels.
Matrix4 projector(int row, int col);

/**
 * A 4x4 density matrix. Construction does not enforce the physical
 * invariants; use the diagnostics below (numerical solutions are only
 * approximately Hermitian and positive).
 */
class DensityMatrix {
public:
    DensityMatrix() : m_(Matrix4::Zero()) {}
    explicit DensityMatrix(const Matrix4& m) : m_(m) {}

    static DensityMatrix from_vector(const Vector16& v) { return DensityMatrix(unvectorize(v)); }
    static DensityMatrix pure(int level);

    const Matrix4& matrix() const { return m_; }
    Vector16 vectorized() const { return vectorize(m_); }

    /// Element rho_ij with 1-based level indices.
    Complex operator()(int i, int j) const { return m_(i - 1, j - 1); }

    Complex trace() const { return m_.trace(); }
    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    bool is_physical(double trace_tol = 1e-12, double herm_tol = 1e-12,
                     double positivity_tol = 1e-10) const;

private:
    Matrix4 m_;
};

/// The four complex constitutive coefficients at one detuning.
struct ResponseCoefficients {
    Complex chi_e{};
    Complex chi_m{};
    Complex xi_eh{};
    Complex xi_he{};
};

bool is_finite(Complex z);

}  // namespace chiral

#endif  // CHIRAL_CORE_HPP
