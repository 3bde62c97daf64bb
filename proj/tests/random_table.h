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

#include <bit>
#include <string>
#include <vector>

#include "pabed/table.h"
#include "test_support.h"

namespace pabed::testing {

// Random table with every column type, arbitrary null patterns and awkward
// payloads (NaN bit patterns, -0.0, empty strings, embedded NUL bytes).
inline Table random_table(SplitMix64& rng, const AcademicYearId& year, std::size_t max_rows = 300,
                          std::size_t max_columns = 8) {
  const std::size_t rows = rng.below(max_rows + 1);
  const std::size_t columns = rng.below(max_columns + 1);
  if (columns == 0) return Table(year, rows);
  std::vector<ColumnData> out;
  for (std::size_t c = 0; c < columns; ++c) {
    auto type = static_cast<ColumnType>(rng.below(4));
    const double null_rate = rng.below(4) == 0 ? 1.0 : rng.uniform();
    NullBitmap nulls(rows);
    std::vector<bool> is_null(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      is_null[r] = rng.uniform() < null_rate;
      if (is_null[r]) nulls.set_null(r);
    }
    std::string name = "col" + std::to_string(c) + (rng.below(3) == 0 ? "_é" : "");
    switch (type) {
      case ColumnType::kInt64: {
        std::vector<std::int64_t> v(rows);
        for (std::size_t r = 0; r < rows; ++r) {
          if (!is_null[r]) v[r] = static_cast<std::int64_t>(rng.next());
        }
        out.emplace_back(name, type, std::move(v), std::move(nulls));
        break;
      }
      case ColumnType::kFloat64: {
        std::vector<double> v(rows);
        for (std::size_t r = 0; r < rows; ++r) {
          if (is_null[r]) continue;
          switch (rng.below(4)) {
            case 0: v[r] = std::bit_cast<double>(rng.next()); break;
            case 1: v[r] = -0.0; break;
            default: v[r] = (rng.uniform() - 0.5) * 1e6; break;
          }
        }
        out.emplace_back(name, type, std::move(v), std::move(nulls));
        break;
      }
      case ColumnType::kBool: {
        std::vector<std::uint8_t> v(rows);
        for (std::size_t r = 0; r < rows; ++r) {
          if (!is_null[r]) v[r] = static_cast<std::uint8_t>(rng.below(2));
        }
        out.emplace_back(name, type, std::move(v), std::move(nulls));
        break;
      }
      case ColumnType::kString: {
        std::vector<std::string> v(rows);
        for (std::size_t r = 0; r < rows; ++r) {
          if (is_null[r]) continue;
          std::size_t len = rng.below(12);
          for (std::size_t i = 0; i < len; ++i) v[r].push_back(static_cast<char>(rng.below(256)));
        }
        out.emplace_back(name, type, std::move(v), std::move(nulls));
        break;
      }
    }
  }
  return Table(year, std::move(out));
}

}  // namespace pabed::testing
