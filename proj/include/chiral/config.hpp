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

#ifndef CHIRAL_CONFIG_HPP
#define CHIRAL_CONFIG_HPP

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "chiral/core.hpp"

namespace chiral {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Reads a flat `key = value` parameter file on top of `base`.
 *
 * Blank lines and `#` comments are ignored. Recognised keys are gamma,
 * gamma2, omega13, omega42, eta, kappa and wavelength, all in SI units
 * (s^-1 and m). Unknown keys, duplicate keys and malformed numbers throw
 * ConfigError. The result is validated.
 */
SchemeParams parse_params(std::istream& in, const SchemeParams& base = make_default_params());

SchemeParams load_params_file(const std::filesystem::path& path,
                              const SchemeParams& base = make_default_params());

}  // namespace chiral

#endif  // CHIRAL_CONFIG_HPP
