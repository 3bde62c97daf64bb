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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "pabed/academic_year.h"
#include "pabed/coerce.h"
#include "pabed/csv_reader.h"
#include "pabed/schema_inference.h"
#include "pabed/table.h"

namespace pabed {

struct IngestOptions {
  CsvOptions csv;  // csv.strict also selects strict coercion
  NullTokenSet nulls;
  // Column types forced by the caller instead of inferred.
  std::map<std::string, ColumnType, std::less<>> type_hints;

  CoercionMode mode() const noexcept {
    return csv.strict ? CoercionMode::kStrict : CoercionMode::kLenient;
  }
};

struct IngestReport {
  std::string table_name;
  std::uint64_t row_count = 0;
  std::uint64_t column_count = 0;
  std::uint64_t null_cells = 0;
  // Cells turned into nulls because they neither matched a null token nor
  // parsed as the column type.
  std::uint64_t coercion_warnings = 0;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct BuiltTable {
  Table table;
  IngestReport report;
};

/// Coerces every cell into typed, null-aware columns. Columns are built in
/// parallel. There is no input size ceiling.
/// Throws std::invalid_argument when schema and header widths differ and
/// Error(kCoercion) for an unparsable cell in strict mode.
BuiltTable build_table(const RawCsv& raw, const TableSchema& schema, const AcademicYearId& year,
                       const IngestOptions& options = {});

/// read_csv + infer_schema + build_table; elapsed_ms covers all three.
/// Throws Error(kUnknownColumn) when a type hint names no header column.
BuiltTable ingest_csv(std::string_view text, const AcademicYearId& year,
                      const IngestOptions& options = {});

namespace reference {
// Serial build through coerce_value, one cell at a time.
BuiltTable build_table(const RawCsv& raw, const TableSchema& schema, const AcademicYearId& year,
                       const IngestOptions& options = {});
}  // namespace reference

}  // namespace pabed
