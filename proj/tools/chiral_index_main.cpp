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

// Command-line front end: detuning sweeps, single points and the
// reproduction suite. Frequencies given as flags are in units of gamma;
// the config file uses SI units.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chiral/acceptance.hpp"
#include "chiral/config.hpp"
#include "chiral/spectrum_io.hpp"
#include "chiral/sweep.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamFlags {
    std::string config;
    std::optional<double> gamma2, omega13, omega42, eta, kappa;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "key = value parameter file (SI units)");
        app->add_option("--gamma2", gamma2, "decay rate of |2> in units of gamma");
        app->add_option("--omega13", omega13, "drive Rabi frequency on |1>-|3> in units of gamma");
        app->add_option("--omega42", omega42, "drive Rabi frequency on |4>-|2> in units of gamma");
        app->add_option("--eta", eta, "medium strength");
        app->add_option("--kappa", kappa, "magnetic/electric coupling ratio");
    }

    // flag > config file > default
    chiral::SchemeParams resolve() const {
        chiral::SchemeParams p = chiral::make_default_params();
        if (!config.empty()) p = chiral::load_params_file(config, p);
        if (gamma2) p.gamma2 = *gamma2 * p.gamma;
        if (omega13) p.omega13 = *omega13 * p.gamma;
        if (omega42) p.omega42 = *omega42 * p.gamma;
        if (eta) p.eta = *eta;
        if (kappa) p.kappa = *kappa;
        try {
            chiral::validate(p);
        } catch (const chiral::InvalidParameters& e) {
            throw UsageError(e.what());
        }
        return p;
    }
};

chiral::Mode mode_from(const std::string& name) {
    try {
        return chiral::parse_mode(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        chiral::write_file_atomically(out_path, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stationary linear response and chiral refractive index of a driven four-level medium"};
    app.require_subcommand(1);

    ParamFlags sweep_params;
    chiral::SweepSpec sweep_spec;
    std::string sweep_mode = "exact", sweep_out, sweep_format = "csv";
    unsigned threads = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "detuning sweep, CSV or JSON output");
    sweep_params.attach(sweep);
    sweep->add_option("--delta-min", sweep_spec.delta_min, "lowest detuning in units of gamma")
        ->capture_default_str();
    sweep->add_option("--delta-max", sweep_spec.delta_max, "highest detuning in units of gamma")
        ->capture_default_str();
    sweep->add_option("--points", sweep_spec.num_points, "number of grid points (>= 2)")
        ->capture_default_str();
    sweep->add_option("--mode", sweep_mode, "exact | weak | nonchiral")->capture_default_str();
    sweep->add_option("--out", sweep_out, "output path (default: stdout)");
    sweep->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    ParamFlags point_params;
    double point_delta = 0.0;
    std::string point_mode = "exact";
    CLI::App* point = app.add_subcommand("point", "single detuning, one JSON row");
    point_params.attach(point);
    point->add_option("--delta", point_delta, "detuning in units of gamma")->required();
    point->add_option("--mode", point_mode, "exact | weak | nonchiral")->capture_default_str();

    app.add_subcommand("reproduce", "run the reproduction suite; exit 0 iff every criterion passes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            sweep_spec.mode = mode_from(sweep_mode);
            sweep_spec.params = sweep_params.resolve();
            try {
                chiral::validate(sweep_spec);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const auto rows = chiral::run_sweep(sweep_spec, threads);
            std::ostringstream text;
            if (sweep_format == "json") {
                text << chiral::rows_to_json(rows).dump(2) << '\n';
            } else {
                chiral::write_csv(text, rows);
            }
            emit(sweep_out, text.str());
            return 0;
        }
        if (point->parsed()) {
            const chiral::Mode mode = mode_from(point_mode);
            const chiral::SchemeParams p = point_params.resolve();
            const auto row = chiral::evaluate_point(p, mode, chiral::Detuning{point_delta});
            std::cout << chiral::row_to_json(row).dump(2) << '\n';
            return row.ok() ? 0 : kExitRuntime;
        }
        const auto results = chiral::acceptance::run_all(std::cout);
        return chiral::acceptance::all_passed(results) ? 0 : kExitRuntime;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const chiral::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
