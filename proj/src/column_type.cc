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

#include "pabed/column_type.h"

#include <algorithm>
#include <cctype>

namespace pabed {

std::string_view type_name(ColumnType t) noexcept {
  switch (t) {
    case ColumnType::kInt64: return "INT64";
    case ColumnType::kFloat64: return "FLOAT64";
    case ColumnType::kBool: return "BOOL";
    case ColumnType::kString: return "STRING";
  }
  return "STRING";
}

std::optional<ColumnType> type_from_tag(std::uint8_t tag) noexcept {
  if (tag > static_cast<std::uint8_t>(ColumnType::kString)) return std::nullopt;
  return static_cast<ColumnType>(tag);
}

std::optional<ColumnType> type_from_name(std::string_view name) noexcept {
  for (std::uint8_t tag = 0; tag <= static_cast<std::uint8_t>(ColumnType::kString); ++tag) {
    auto t = static_cast<ColumnType>(tag);
    std::string_view canonical = type_name(t);
    if (std::ranges::equal(name, canonical, [](char a, char b) {
          return std::toupper(static_cast<unsigned char>(a)) == b;
        })) {
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace pabed
