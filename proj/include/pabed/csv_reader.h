// Copyright 2026 The pabed Authors
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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pabed {

struct CsvOptions {
  char delimiter = ',';
  // Strict: short or long rows are CsvSyntax errors and unparsable cells are
  // CoercionErrors. Lenient: short rows are padded with empty (null) cells.
  bool strict = false;
};

/// Parsed CSV text: a de-duplicated header plus row-major string cells.
/// Every row holds exactly header().size() cells.
class RawCsv {
 public:
  RawCsv() = default;
  RawCsv(std::vector<std::string> header, std::vector<std::string> cells);

  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t column_count() const noexcept { return header_.size(); }
  std::size_t row_count() const noexcept { return rows_; }

  std::span<const std::string> row(std::size_t r) const {
    return {cells_.data() + r * header_.size(), header_.size()};
  }
  const std::string& cell(std::size_t r, std::size_t c) const {
    return cells_[r * header_.size() + c];
  }

  /// All cells of one column, copied out in row order.
  std::vector<std::string> column_cells(std::size_t c) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> cells_;
  std::size_t rows_ = 0;
};

/// RFC 4180 parse. Quoted fields may hold delimiters, newlines and doubled
/// quotes. A leading UTF-8 byte-order mark is stripped and blank lines are
/// skipped. Empty header names become `column_<n>`; duplicates get `_2`, `_3`...
///
/// Throws Error(kEmptyInput) when there is no header record and
/// Error(kCsvSyntax) on an unclosed quote or a row-length violation.
RawCsv read_csv(std::string_view text, const CsvOptions& options = {});
RawCsv read_csv(std::istream& in, const CsvOptions& options = {});

/// Unique column names in input order using the `_2`, `_3` suffix rule.
std::vector<std::string> deduplicate_header(std::vector<std::string> names);

/// Whole-file read. Throws Error(kIo).
std::string read_text_file(const std::filesystem::path& path);

}  // namespace pabed
