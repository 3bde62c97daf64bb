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

#include "pabed/kernels.h"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pabed/error.h"

namespace pabed::kernels {
namespace {

void require_numeric(const ColumnData& c) {
  if (!is_numeric(c.type())) {
    throw Error(ErrorCode::kTypeMismatch, "column '" + c.name() + "' has type " +
                                              std::string(type_name(c.type())) +
                                              ", expected INT64 or FLOAT64");
  }
}

// Calls f(span<const T>) with the column's numeric payload.
template <typename F>
decltype(auto) with_numeric(const ColumnData& c, F&& f) {
  require_numeric(c);
  if (c.type() == ColumnType::kInt64) return f(c.int64s());
  return f(c.float64s());
}

struct SumPartial {
  CompensatedSum sum;
  std::size_t count = 0;
};

struct WeightedPartial {
  CompensatedSum weighted;
  CompensatedSum weight;
  std::size_t count = 0;
};

// Accumulators live in locals so they stay in registers inside the outlined
// OpenMP body.
template <typename T>
void sum_range(std::span<const T> values, const NullBitmap& nulls, std::size_t begin,
               std::size_t end, SumPartial& out) {
  SumPartial local;
  for (std::size_t i = begin; i < end; ++i) {
    if (nulls.is_null(i)) continue;
    local.sum.add(static_cast<double>(values[i]));
    ++local.count;
  }
  out = local;
}

template <typename W, typename V>
void weighted_range(std::span<const W> w, const NullBitmap& wn, std::span<const V> v,
                    const NullBitmap& vn, std::size_t begin, std::size_t end,
                    WeightedPartial& out) {
  WeightedPartial local;
  for (std::size_t i = begin; i < end; ++i) {
    if (wn.is_null(i) || vn.is_null(i)) continue;
    const double wi = static_cast<double>(w[i]);
    local.weighted.add(wi * static_cast<double>(v[i]));
    local.weight.add(wi);
    ++local.count;
  }
  out = local;
}

std::size_t block_count(std::size_t rows) { return (rows + kBlockRows - 1) / kBlockRows; }

void check_lengths(const ColumnData& a, const ColumnData& b) {
  if (a.size() != b.size()) throw std::invalid_argument("column lengths differ");
}

}  // namespace

MaskedSum masked_sum(const ColumnData& column) {
  return with_numeric(column, [&](auto values) {
    const std::size_t rows = values.size();
    const auto blocks = static_cast<std::ptrdiff_t>(block_count(rows));
    std::vector<SumPartial> partials(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
      const std::size_t begin = static_cast<std::size_t>(b) * kBlockRows;
      sum_range(values, column.nulls(), begin, std::min(rows, begin + kBlockRows),
                partials[static_cast<std::size_t>(b)]);
    }

    SumPartial total;
    for (const auto& p : partials) {
      total.sum.merge(p.sum);
      total.count += p.count;
    }
    return MaskedSum{total.sum.value(), total.count};
  });
}

MaskedWeightedSum masked_weighted_sum(const ColumnData& weight, const ColumnData& value) {
  check_lengths(weight, value);
  return with_numeric(weight, [&](auto w) {
    return with_numeric(value, [&](auto v) {
      const std::size_t rows = w.size();
      const auto blocks = static_cast<std::ptrdiff_t>(block_count(rows));
      std::vector<WeightedPartial> partials(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t b = 0; b < blocks; ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kBlockRows;
        weighted_range(w, weight.nulls(), v, value.nulls(), begin,
                       std::min(rows, begin + kBlockRows), partials[static_cast<std::size_t>(b)]);
      }

      WeightedPartial total;
      for (const auto& p : partials) {
        total.weighted.merge(p.weighted);
        total.weight.merge(p.weight);
        total.count += p.count;
      }
      return MaskedWeightedSum{total.weighted.value(), total.weight.value(), total.count};
    });
  });
}

namespace reference {

MaskedSum masked_sum(const ColumnData& column) {
  return with_numeric(column, [&](auto values) {
    SumPartial p;
    sum_range(values, column.nulls(), 0, values.size(), p);
    return MaskedSum{p.sum.value(), p.count};
  });
}

MaskedWeightedSum masked_weighted_sum(const ColumnData& weight, const ColumnData& value) {
  check_lengths(weight, value);
  return with_numeric(weight, [&](auto w) {
    return with_numeric(value, [&](auto v) {
      WeightedPartial p;
      weighted_range(w, weight.nulls(), v, value.nulls(), 0, w.size(), p);
      return MaskedWeightedSum{p.weighted.value(), p.weight.value(), p.count};
    });
  });
}

}  // namespace reference

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) noexcept {
#ifdef _OPENMP
  omp_set_num_threads(std::max(1, n));
#else
  (void)n;
#endif
}

}  // namespace pabed::kernels
