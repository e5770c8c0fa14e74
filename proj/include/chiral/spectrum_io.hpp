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

#ifndef CHIRAL_SPECTRUM_IO_HPP
#define CHIRAL_SPECTRUM_IO_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chiral/sweep.hpp"

namespace chiral {

/// Column names shared by the CSV header and the JSON object keys.
const std::vector<std::string>& spectrum_columns();

/// Shortest decimal that round-trips; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double v);

/// Inverse of format_double. Throws std::invalid_argument on malformed input.
double parse_double(std::string_view text);

/// The 16 numeric values of a row in column order.
std::vector<double> row_values(const SpectrumRow& row);

void write_csv(std::ostream& out, std::span<const SpectrumRow> rows);

/// One object per row keyed by column name; non-finite numbers are written as
/// the strings "inf", "-inf" or "nan", and failed rows carry an "error" key.
nlohmann::json row_to_json(const SpectrumRow& row);
nlohmann::json rows_to_json(std::span<const SpectrumRow> rows);

/// Writes to a temporary sibling file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace chiral

#endif  // CHIRAL_SPECTRUM_IO_HPP
