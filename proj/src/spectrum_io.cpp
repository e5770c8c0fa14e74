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

#include "chiral/spectrum_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace chiral {

const std::vector<std::string>& spectrum_columns() {
    static const std::vector<std::string> cols = {
        "delta",    "re_chi_e", "im_chi_e", "re_chi_m", "im_chi_m", "re_xi_eh",
        "im_xi_eh", "re_xi_he", "im_xi_he", "re_eps",   "im_eps",   "re_mu",
        "im_mu",    "re_n",     "im_n",     "fom"};
    return cols;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> row_values(const SpectrumRow& r) {
    return {r.delta,         r.chi_e.real(), r.chi_e.imag(),   r.chi_m.real(),
            r.chi_m.imag(),  r.xi_eh.real(), r.xi_eh.imag(),   r.xi_he.real(),
            r.xi_he.imag(),  r.epsilon.real(), r.epsilon.imag(), r.mu.real(),
            r.mu.imag(),     r.n.real(),     r.n.imag(),       r.fom};
}

void write_csv(std::ostream& out, std::span<const SpectrumRow> rows) {
    const auto& cols = spectrum_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const SpectrumRow& row : rows) {
        const auto values = row_values(row);
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_double(values[i]);
        out << '\n';
    }
}

nlohmann::json row_to_json(const SpectrumRow& row) {
    nlohmann::json obj = nlohmann::json::object();
    const auto& cols = spectrum_columns();
    const auto values = row_values(row);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (std::isfinite(values[i])) {
            obj[cols[i]] = values[i];
        } else {
            obj[cols[i]] = format_double(values[i]);
        }
    }
    if (row.error) obj["error"] = *row.error;
    return obj;
}

nlohmann::json rows_to_json(std::span<const SpectrumRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SpectrumRow& row : rows) arr.push_back(row_to_json(row));
    return arr;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

}  // namespace chiral
