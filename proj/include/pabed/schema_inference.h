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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pabed/coerce.h"
#include "pabed/column_type.h"
#include "pabed/csv_reader.h"

namespace pabed {

struct ColumnSpec {
  std::string name;
  ColumnType type = ColumnType::kString;

  friend bool operator==(const ColumnSpec&, const ColumnSpec&) = default;
};

using TableSchema = std::vector<ColumnSpec>;

/// Narrowest type a single cell parses as, or nullopt for a null token.
std::optional<ColumnType> detect_cell_type(std::string_view cell, const NullTokenSet& nulls);

/// Running least upper bound of detected cell types.
class TypeAccumulator {
 public:
  explicit TypeAccumulator(const NullTokenSet& nulls) : nulls_(&nulls) {}

  void add(std::string_view cell);
  void merge(const TypeAccumulator& other);

  /// nullopt while every cell seen so far was null.
  std::optional<ColumnType> observed() const noexcept { return observed_; }
  /// True once STRING was seen; further cells cannot change the result.
  bool saturated() const noexcept {
    return observed_.has_value() && *observed_ == ColumnType::kString;
  }
  /// STRING when nothing but nulls was seen.
  ColumnType result() const noexcept { return observed_.value_or(ColumnType::kString); }

 private:
  const NullTokenSet* nulls_;
  std::optional<ColumnType> observed_;
};

/// Scans every cell (no prefix sampling), so the result does not depend on
/// cell order.
ColumnType infer_column_type(std::span<const std::string> cells, const NullTokenSet& nulls = {});

/// One type per header column; columns are inferred in parallel.
TableSchema infer_schema(const RawCsv& raw, const NullTokenSet& nulls = {});

namespace reference {
// Single-threaded row-order scan kept as the test baseline for infer_schema.
TableSchema infer_schema(const RawCsv& raw, const NullTokenSet& nulls = {});
}  // namespace reference

}  // namespace pabed
