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

#include "pabed/schema_inference.h"

#include <cstddef>

namespace pabed {

std::optional<ColumnType> detect_cell_type(std::string_view cell, const NullTokenSet& nulls) {
  if (nulls.contains(cell)) return std::nullopt;
  if (parse_int64(cell)) return ColumnType::kInt64;
  if (parse_float64(cell)) return ColumnType::kFloat64;
  if (parse_bool(cell)) return ColumnType::kBool;
  return ColumnType::kString;
}

void TypeAccumulator::add(std::string_view cell) {
  if (observed_ == ColumnType::kString) return;
  // Once FLOAT64, only the float parse can keep the column numeric.
  if (observed_ == ColumnType::kFloat64 && !nulls_->contains(cell)) {
    if (!parse_float64(cell)) observed_ = ColumnType::kString;
    return;
  }
  auto t = detect_cell_type(cell, *nulls_);
  if (!t) return;
  observed_ = observed_ ? promote(*observed_, *t) : *t;
}

void TypeAccumulator::merge(const TypeAccumulator& other) {
  if (!other.observed_) return;
  observed_ = observed_ ? promote(*observed_, *other.observed_) : *other.observed_;
}

ColumnType infer_column_type(std::span<const std::string> cells, const NullTokenSet& nulls) {
  TypeAccumulator acc(nulls);
  for (const auto& c : cells) acc.add(c);
  return acc.result();
}

TableSchema infer_schema(const RawCsv& raw, const NullTokenSet& nulls) {
  const auto& header = raw.header();
  const auto columns = static_cast<std::ptrdiff_t>(header.size());
  const std::size_t rows = raw.row_count();
  TableSchema schema(header.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < columns; ++c) {
    TypeAccumulator acc(nulls);
    for (std::size_t r = 0; r < rows; ++r) {
      acc.add(raw.cell(r, static_cast<std::size_t>(c)));
      if (acc.saturated()) break;
    }
    schema[static_cast<std::size_t>(c)] = {header[static_cast<std::size_t>(c)], acc.result()};
  }
  return schema;
}

namespace reference {

TableSchema infer_schema(const RawCsv& raw, const NullTokenSet& nulls) {
  TableSchema schema;
  std::vector<std::optional<ColumnType>> seen(raw.column_count());
  for (std::size_t r = 0; r < raw.row_count(); ++r) {
    for (std::size_t c = 0; c < raw.column_count(); ++c) {
      auto t = detect_cell_type(raw.cell(r, c), nulls);
      if (t) seen[c] = seen[c] ? promote(*seen[c], *t) : *t;
    }
  }
  for (std::size_t c = 0; c < raw.column_count(); ++c) {
    schema.push_back({raw.header()[c], seen[c].value_or(ColumnType::kString)});
  }
  return schema;
}

}  // namespace reference

}  // namespace pabed
