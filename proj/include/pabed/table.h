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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pabed/academic_year.h"
#include "pabed/column_type.h"
#include "pabed/schema_inference.h"

namespace pabed {

/// One bit per row, set = null. Bit i lives in byte i/8 at position i%8
/// (least significant first); padding bits in the last byte are zero.
class NullBitmap {
 public:
  NullBitmap() = default;
  explicit NullBitmap(std::size_t rows) : bytes_((rows + 7) / 8, 0), rows_(rows) {}

  /// Throws Error(kFormat) if the byte count is wrong or padding bits are set.
  static NullBitmap from_bytes(std::vector<std::uint8_t> bytes, std::size_t rows);

  std::size_t size() const noexcept { return rows_; }
  std::size_t null_count() const noexcept { return nulls_; }

  bool is_null(std::size_t i) const noexcept { return (bytes_[i >> 3] >> (i & 7)) & 1u; }
  void set_null(std::size_t i) noexcept {
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (i & 7));
    if (!(bytes_[i >> 3] & bit)) {
      bytes_[i >> 3] |= bit;
      ++nulls_;
    }
  }

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  friend bool operator==(const NullBitmap&, const NullBitmap&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t rows_ = 0;
  std::size_t nulls_ = 0;
};

// BOOL is stored one byte per row holding 0 or 1.
using ColumnValues = std::variant<std::vector<std::int64_t>, std::vector<double>,
                                  std::vector<std::uint8_t>, std::vector<std::string>>;

/// A typed value vector plus its null bitmap. Null slots hold zero / empty.
class ColumnData {
 public:
  /// Throws std::invalid_argument if the value vector does not match `type`
  /// or its length differs from the bitmap.
  ColumnData(std::string name, ColumnType type, ColumnValues values, NullBitmap nulls);

  const std::string& name() const noexcept { return name_; }
  ColumnType type() const noexcept { return type_; }
  std::size_t size() const noexcept { return nulls_.size(); }
  std::size_t null_count() const noexcept { return nulls_.null_count(); }
  std::size_t non_null_count() const noexcept { return size() - null_count(); }
  const NullBitmap& nulls() const noexcept { return nulls_; }
  const ColumnValues& values() const noexcept { return values_; }

  std::span<const std::int64_t> int64s() const { return std::get<0>(values_); }
  std::span<const double> float64s() const { return std::get<1>(values_); }
  std::span<const std::uint8_t> bools() const { return std::get<2>(values_); }
  std::span<const std::string> strings() const { return std::get<3>(values_); }

 private:
  std::string name_;
  ColumnType type_;
  ColumnValues values_;
  NullBitmap nulls_;
};

/// Bitwise comparison: float payloads compare by bit pattern.
bool operator==(const ColumnData& a, const ColumnData& b);

/// Immutable year table. All columns have row_count() entries and follow
/// schema() order.
class Table {
 public:
  /// Throws std::invalid_argument on unequal column lengths or duplicate names.
  Table(AcademicYearId year, std::vector<ColumnData> columns);
  /// Zero-column table with an explicit row count.
  Table(AcademicYearId year, std::size_t row_count);

  const AcademicYearId& year() const noexcept { return year_; }
  const TableSchema& schema() const noexcept { return schema_; }
  const std::vector<ColumnData>& columns() const noexcept { return columns_; }
  std::size_t row_count() const noexcept { return row_count_; }
  std::size_t column_count() const noexcept { return columns_.size(); }

  const ColumnData* find(std::string_view name) const noexcept;
  /// Throws Error(kUnknownColumn).
  const ColumnData& column(std::string_view name) const;

 private:
  AcademicYearId year_;
  TableSchema schema_;
  std::vector<ColumnData> columns_;
  std::size_t row_count_ = 0;
};

bool operator==(const Table& a, const Table& b);

}  // namespace pabed
