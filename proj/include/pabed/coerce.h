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
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pabed/column_type.h"

namespace pabed {

/// Cell spellings that mean "no value". The empty cell is always a member
/// because lenient parsing pads short rows with empty cells.
class NullTokenSet {
 public:
  NullTokenSet();  // "", "NULL", "null", "PrivacySuppressed"
  NullTokenSet(std::initializer_list<std::string_view> tokens);
  explicit NullTokenSet(const std::vector<std::string>& tokens);

  bool contains(std::string_view cell) const noexcept {
    if (cell.empty()) return true;
    for (const auto& t : tokens_) {
      if (t == cell) return true;
    }
    return false;
  }

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

 private:
  std::vector<std::string> tokens_;
};

enum class CoercionMode { kLenient, kStrict };

using Value = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

std::optional<std::int64_t> parse_int64(std::string_view s) noexcept;
// Plain decimal/exponent notation only; "inf", "nan" and hex are rejected.
std::optional<double> parse_float64(std::string_view s) noexcept;
// Case-insensitive true/false. 0/1 are not booleans.
std::optional<bool> parse_bool(std::string_view s) noexcept;

/// Converts one cell to `target`. Null tokens yield monostate. In lenient mode
/// an unparsable cell also yields monostate and bumps `warnings`; strict mode
/// throws Error(kCoercion).
Value coerce_value(std::string_view cell, ColumnType target, CoercionMode mode,
                   const NullTokenSet& nulls, std::size_t& warnings);
Value coerce_value(std::string_view cell, ColumnType target,
                   CoercionMode mode = CoercionMode::kLenient);

}  // namespace pabed
