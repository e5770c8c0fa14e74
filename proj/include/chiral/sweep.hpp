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

#ifndef CHIRAL_SWEEP_HPP
#define CHIRAL_SWEEP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiral/core.hpp"
#include "chiral/optics.hpp"

namespace chiral {

/// exact: full steady state and chiral index; weak: frozen ground population
/// and chiral index; nonchiral: full steady state, chirality folded into mu.
enum class Mode { exact, weak, nonchiral };

std::string_view to_string(Mode m);
/// Throws std::invalid_argument for unknown names.
Mode parse_mode(std::string_view name);

struct SweepSpec {
    double delta_min = -20.0;  ///< units of gamma
    double delta_max = 20.0;
    std::size_t num_points = 2001;
    Mode mode = Mode::exact;
    SchemeParams params = make_default_params();
};

void validate(const SweepSpec& spec);

/**
 * One spectrum sample. For the nonchiral mode chi_m holds the effective
 * susceptibility chi_m + xi_he, mu = 1 + chi_m, and both xi fields are zero.
 * A failed point keeps its detuning, carries the message in `error` and has
 * NaN in every numeric field.
 */
struct SpectrumRow {
    double delta = 0.0;
    Complex chi_e{};
    Complex chi_m{};
    Complex xi_eh{};
    Complex xi_he{};
    Complex epsilon{1.0, 0.0};
    Complex mu{1.0, 0.0};
    Complex n{1.0, 0.0};
    double fom = kLosslessFom;
    std::optional<std::string> error;

    bool ok() const { return !error.has_value(); }
};

/// Uniform grid including both endpoints.
std::vector<double> detuning_grid(const SweepSpec& spec);

/// Evaluates one detuning. Solver failures are recorded in the row.
SpectrumRow evaluate_point(const SchemeParams& p, Mode mode, Detuning delta);

/**
 * Evaluates every grid point, in parallel when `threads` != 1 (0 picks the
 * hardware concurrency). Rows come back in ascending delta regardless of
 * scheduling.
 */
std::vector<SpectrumRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// FOM is only reported where |Re n - 1| exceeds this.
inline constexpr double kRefractionThreshold = 0.01;

struct Extremum {
    double value = 0.0;
    double delta = 0.0;
};

struct SpectrumSummary {
    Extremum min_im_n;
    Extremum max_abs_re_n;
    std::optional<Extremum> max_fom;  ///< empty when no row refracts
    std::size_t rows = 0;
    std::size_t failed = 0;
};

/// Throws std::invalid_argument when no successful row is present.
SpectrumSummary summarize(std::span<const SpectrumRow> rows);

}  // namespace chiral

#endif  // CHIRAL_SWEEP_HPP
