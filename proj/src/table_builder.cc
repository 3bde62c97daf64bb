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

#include "pabed/table_builder.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <stdexcept>

#include "pabed/error.h"

namespace pabed {
namespace {

struct ColumnOutcome {
  std::optional<ColumnData> column;
  std::size_t warnings = 0;
  std::exception_ptr error;
};

[[noreturn]] void coercion_failure(std::string_view cell, const ColumnSpec& spec, std::size_t row) {
  throw Error(ErrorCode::kCoercion, "row " + std::to_string(row + 1) + ", column '" + spec.name +
                                        "': cannot convert '" + std::string(cell) + "' to " +
                                        std::string(type_name(spec.type)));
}

template <typename T, typename Parse>
ColumnData build_typed(const RawCsv& raw, std::size_t c, const ColumnSpec& spec,
                       const IngestOptions& options, std::size_t& warnings, Parse parse) {
  const std::size_t rows = raw.row_count();
  std::vector<T> values(rows, T{});
  NullBitmap nulls(rows);
  const bool strict = options.mode() == CoercionMode::kStrict;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string& cell = raw.cell(r, c);
    if (options.nulls.contains(cell)) {
      nulls.set_null(r);
      continue;
    }
    if (auto v = parse(cell)) {
      values[r] = static_cast<T>(*v);
    } else {
      if (strict) coercion_failure(cell, spec, r);
      ++warnings;
      nulls.set_null(r);
    }
  }
  return ColumnData(spec.name, spec.type, std::move(values), std::move(nulls));
}

ColumnData build_column(const RawCsv& raw, std::size_t c, const ColumnSpec& spec,
                        const IngestOptions& options, std::size_t& warnings) {
  switch (spec.type) {
    case ColumnType::kInt64:
      return build_typed<std::int64_t>(raw, c, spec, options, warnings, parse_int64);
    case ColumnType::kFloat64:
      return build_typed<double>(raw, c, spec, options, warnings, parse_float64);
    case ColumnType::kBool:
      return build_typed<std::uint8_t>(raw, c, spec, options, warnings, parse_bool);
    case ColumnType::kString:
      break;
  }
  const std::size_t rows = raw.row_count();
  std::vector<std::string> values(rows);
  NullBitmap nulls(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string& cell = raw.cell(r, c);
    if (options.nulls.contains(cell)) {
      nulls.set_null(r);
    } else {
      values[r] = cell;
    }
  }
  return ColumnData(spec.name, spec.type, std::move(values), std::move(nulls));
}

void check_widths(const RawCsv& raw, const TableSchema& schema) {
  if (schema.size() != raw.column_count()) {
    throw std::invalid_argument("schema has " + std::to_string(schema.size()) +
                                " columns but CSV header has " +
                                std::to_string(raw.column_count()));
  }
}

IngestReport make_report(const Table& table, std::size_t warnings) {
  IngestReport report;
  report.table_name = table.year().label();
  report.row_count = table.row_count();
  report.column_count = table.column_count();
  for (const auto& c : table.columns()) report.null_cells += c.null_count();
  report.coercion_warnings = warnings;
  return report;
}

Table assemble(const RawCsv& raw, const AcademicYearId& year, std::vector<ColumnData> columns) {
  if (columns.empty()) return Table(year, raw.row_count());
  return Table(year, std::move(columns));
}

}  // namespace

BuiltTable build_table(const RawCsv& raw, const TableSchema& schema, const AcademicYearId& year,
                       const IngestOptions& options) {
  check_widths(raw, schema);
  const auto columns = static_cast<std::ptrdiff_t>(schema.size());
  std::vector<ColumnOutcome> outcomes(schema.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < columns; ++c) {
    auto& out = outcomes[static_cast<std::size_t>(c)];
    try {
      out.column.emplace(build_column(raw, static_cast<std::size_t>(c),
                                      schema[static_cast<std::size_t>(c)], options, out.warnings));
    } catch (...) {
      out.error = std::current_exception();
    }
  }

  std::vector<ColumnData> built;
  built.reserve(outcomes.size());
  std::size_t warnings = 0;
  for (auto& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
    warnings += o.warnings;
    built.push_back(std::move(*o.column));
  }
  Table table = assemble(raw, year, std::move(built));
  IngestReport report = make_report(table, warnings);
  return {std::move(table), std::move(report)};
}

BuiltTable ingest_csv(std::string_view text, const AcademicYearId& year,
                      const IngestOptions& options) {
  auto start = std::chrono::steady_clock::now();
  RawCsv raw = read_csv(text, options.csv);
  TableSchema schema = infer_schema(raw, options.nulls);
  for (const auto& [name, type] : options.type_hints) {
    auto it = std::ranges::find(schema, name, &ColumnSpec::name);
    if (it == schema.end()) {
      throw Error(ErrorCode::kUnknownColumn, "type hint for unknown column '" + name + "'");
    }
    it->type = type;
  }
  BuiltTable built = build_table(raw, schema, year, options);
  built.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return built;
}

namespace reference {

BuiltTable build_table(const RawCsv& raw, const TableSchema& schema, const AcademicYearId& year,
                       const IngestOptions& options) {
  check_widths(raw, schema);
  const std::size_t rows = raw.row_count();
  std::size_t warnings = 0;
  std::vector<ColumnData> columns;
  for (std::size_t c = 0; c < schema.size(); ++c) {
    const ColumnSpec& spec = schema[c];
    NullBitmap nulls(rows);
    ColumnValues values;
    switch (spec.type) {
      case ColumnType::kInt64: values = std::vector<std::int64_t>(rows); break;
      case ColumnType::kFloat64: values = std::vector<double>(rows); break;
      case ColumnType::kBool: values = std::vector<std::uint8_t>(rows); break;
      case ColumnType::kString: values = std::vector<std::string>(rows); break;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      Value v = coerce_value(raw.cell(r, c), spec.type, options.mode(), options.nulls, warnings);
      if (std::holds_alternative<std::monostate>(v)) {
        nulls.set_null(r);
      } else if (auto* i = std::get_if<std::int64_t>(&v)) {
        std::get<0>(values)[r] = *i;
      } else if (auto* d = std::get_if<double>(&v)) {
        std::get<1>(values)[r] = *d;
      } else if (auto* b = std::get_if<bool>(&v)) {
        std::get<2>(values)[r] = *b ? 1 : 0;
      } else {
        std::get<3>(values)[r] = std::get<std::string>(std::move(v));
      }
    }
    columns.emplace_back(spec.name, spec.type, std::move(values), std::move(nulls));
  }
  Table table = assemble(raw, year, std::move(columns));
  IngestReport report = make_report(table, warnings);
  return {std::move(table), std::move(report)};
}

}  // namespace reference

}  // namespace pabed
