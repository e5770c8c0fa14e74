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

#include "chiral/config.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace chiral {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, int line_no) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("line " + std::to_string(line_no) + ": invalid number '" + text + "'");
    }
    return value;
}

double* field_for(SchemeParams& p, const std::string& key) {
    if (key == "gamma") return &p.gamma;
    if (key == "gamma2") return &p.gamma2;
    if (key == "omega13") return &p.omega13;
    if (key == "omega42") return &p.omega42;
    if (key == "eta") return &p.eta;
    if (key == "kappa") return &p.kappa;
    if (key == "wavelength") return &p.wavelength;
    return nullptr;
}

}  // namespace

SchemeParams parse_params(std::istream& in, const SchemeParams& base) {
    SchemeParams p = base;
    std::set<std::string> seen;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        double* field = field_for(p, key);
        if (field == nullptr) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        *field = parse_number(value, line_no);
    }
    try {
        validate(p);
    } catch (const InvalidParameters& e) {
        throw ConfigError(e.what());
    }
    return p;
}

SchemeParams load_params_file(const std::filesystem::path& path, const SchemeParams& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    return parse_params(in, base);
}

}  // namespace chiral
