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

#include <cstdint>
#include <optional>
#include <string_view>

namespace pabed {

/// Storage type of a column. The numeric values double as the on-disk type tag.
enum class ColumnType : std::uint8_t {
  kInt64 = 0,
  kFloat64 = 1,
  kBool = 2,
  kString = 3,
};

/// Least upper bound on the promotion lattice INT64 < FLOAT64 < STRING,
/// BOOL < STRING. Commutative and idempotent.
constexpr ColumnType promote(ColumnType a, ColumnType b) noexcept {
  if (a == b) return a;
  if ((a == ColumnType::kInt64 && b == ColumnType::kFloat64) ||
      (a == ColumnType::kFloat64 && b == ColumnType::kInt64)) {
    return ColumnType::kFloat64;
  }
  return ColumnType::kString;
}

constexpr bool is_numeric(ColumnType t) noexcept {
  return t == ColumnType::kInt64 || t == ColumnType::kFloat64;
}

std::string_view type_name(ColumnType t) noexcept;
std::optional<ColumnType> type_from_tag(std::uint8_t tag) noexcept;
/// Inverse of type_name, case-insensitive.
std::optional<ColumnType> type_from_name(std::string_view name) noexcept;

}  // namespace pabed
