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

#include "pabed/table.h"

#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "pabed/error.h"

namespace pabed {

NullBitmap NullBitmap::from_bytes(std::vector<std::uint8_t> bytes, std::size_t rows) {
  if (bytes.size() != (rows + 7) / 8) {
    throw Error(ErrorCode::kFormat, "null bitmap size does not match row count");
  }
  if (rows % 8 != 0 && (bytes.back() >> (rows % 8)) != 0) {
    throw Error(ErrorCode::kFormat, "null bitmap padding bits set");
  }
  NullBitmap out;
  out.rows_ = rows;
  for (auto b : bytes) out.nulls_ += static_cast<std::size_t>(std::popcount(b));
  out.bytes_ = std::move(bytes);
  return out;
}

namespace {

std::size_t values_size(const ColumnValues& v) {
  return std::visit([](const auto& vec) { return vec.size(); }, v);
}

}  // namespace

ColumnData::ColumnData(std::string name, ColumnType type, ColumnValues values, NullBitmap nulls)
    : name_(std::move(name)), type_(type), values_(std::move(values)), nulls_(std::move(nulls)) {
  if (values_.index() != static_cast<std::size_t>(type_)) {
    throw std::invalid_argument("column '" + name_ + "': value vector does not match type " +
                                std::string(type_name(type_)));
  }
  if (values_size(values_) != nulls_.size()) {
    throw std::invalid_argument("column '" + name_ + "': value and bitmap lengths differ");
  }
}

bool operator==(const ColumnData& a, const ColumnData& b) {
  if (a.name() != b.name() || a.type() != b.type() || !(a.nulls() == b.nulls())) return false;
  if (a.type() == ColumnType::kFloat64) {
    auto x = a.float64s();
    auto y = b.float64s();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(x[i]) != std::bit_cast<std::uint64_t>(y[i])) return false;
    }
    return true;
  }
  return a.values() == b.values();
}

Table::Table(AcademicYearId year, std::vector<ColumnData> columns)
    : year_(std::move(year)), columns_(std::move(columns)) {
  row_count_ = columns_.empty() ? 0 : columns_.front().size();
  std::unordered_set<std::string_view> names;
  for (const auto& c : columns_) {
    if (c.size() != row_count_) {
      throw std::invalid_argument("column '" + c.name() + "' length differs from table rows");
    }
    if (!names.insert(c.name()).second) {
      throw std::invalid_argument("duplicate column name '" + c.name() + "'");
    }
    schema_.push_back({c.name(), c.type()});
  }
}

Table::Table(AcademicYearId year, std::size_t row_count)
    : year_(std::move(year)), row_count_(row_count) {}

const ColumnData* Table::find(std::string_view name) const noexcept {
  for (const auto& c : columns_) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

const ColumnData& Table::column(std::string_view name) const {
  if (const auto* c = find(name)) return *c;
  throw Error(ErrorCode::kUnknownColumn,
              "column '" + std::string(name) + "' not found in " + year_.label());
}

bool operator==(const Table& a, const Table& b) {
  return a.year() == b.year() && a.row_count() == b.row_count() && a.schema() == b.schema() &&
         a.columns() == b.columns();
}

}  // namespace pabed
