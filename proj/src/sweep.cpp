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

#include "chiral/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "chiral/response.hpp"

namespace chiral {

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::exact: return "exact";
        case Mode::weak: return "weak";
        case Mode::nonchiral: return "nonchiral";
    }
    return "unknown";
}

Mode parse_mode(std::string_view name) {
    if (name == "exact") return Mode::exact;
    if (name == "weak") return Mode::weak;
    if (name == "nonchiral") return Mode::nonchiral;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

void validate(const SweepSpec& spec) {
    if (!std::isfinite(spec.delta_min) || !std::isfinite(spec.delta_max) ||
        !(spec.delta_min < spec.delta_max)) {
        throw std::invalid_argument("sweep requires finite delta_min < delta_max");
    }
    if (spec.num_points < 2) throw std::invalid_argument("sweep requires at least 2 points");
    validate(spec.params);
}

std::vector<double> detuning_grid(const SweepSpec& spec) {
    validate(spec);
    const std::size_t n = spec.num_points;
    const double span = spec.delta_max - spec.delta_min;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = spec.delta_min + span * (static_cast<double>(i) / static_cast<double>(n - 1));
    }
    grid.back() = spec.delta_max;
    return grid;
}

namespace {

SpectrumRow failed_row(double delta, std::string message) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const Complex cnan{nan, nan};
    SpectrumRow row;
    row.delta = delta;
    row.chi_e = row.chi_m = row.xi_eh = row.xi_he = cnan;
    row.epsilon = row.mu = row.n = cnan;
    row.fom = nan;
    row.error = std::move(message);
    return row;
}

}  // namespace

SpectrumRow evaluate_point(const SchemeParams& p, Mode mode, Detuning delta) {
    try {
        const ResponseMatrix r =
            mode == Mode::weak ? weak_excitation_response(p, delta) : exact_response(p, delta);
        ResponseCoefficients c = constitutive_coefficients(r, p);

        SpectrumRow row;
        row.delta = delta.value;
        if (mode == Mode::nonchiral) {
            c.chi_m = effective_chi_m(c);
            c.xi_eh = c.xi_he = Complex{};
            row.n = nonchiral_index({c.chi_e, c.chi_m, {}, {}});
        } else {
            row.n = chiral_index(c);
        }
        row.chi_e = c.chi_e;
        row.chi_m = c.chi_m;
        row.xi_eh = c.xi_eh;
        row.xi_he = c.xi_he;
        row.epsilon = 1.0 + c.chi_e;
        row.mu = 1.0 + c.chi_m;
        row.fom = figure_of_merit(row.n);
        return row;
    } catch (const std::exception& e) {
        return failed_row(delta.value, e.what());
    }
}

std::vector<SpectrumRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    const std::vector<double> grid = detuning_grid(spec);
    std::vector<SpectrumRow> rows(grid.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            rows[i] = evaluate_point(spec.params, spec.mode, Detuning{grid[i]});
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

SpectrumSummary summarize(std::span<const SpectrumRow> rows) {
    SpectrumSummary s;
    s.rows = rows.size();
    bool any = false;
    for (const SpectrumRow& row : rows) {
        if (!row.ok()) {
            ++s.failed;
            continue;
        }
        if (!any || row.n.imag() < s.min_im_n.value) s.min_im_n = {row.n.imag(), row.delta};
        if (!any || std::abs(row.n.real()) > s.max_abs_re_n.value) {
            s.max_abs_re_n = {std::abs(row.n.real()), row.delta};
        }
        any = true;
        if (std::abs(row.n.real() - 1.0) > kRefractionThreshold &&
            (!s.max_fom || row.fom > s.max_fom->value)) {
            s.max_fom = Extremum{row.fom, row.delta};
        }
    }
    if (!any) throw std::invalid_argument("summarize needs at least one successful row");
    return s;
}

}  // namespace chiral
