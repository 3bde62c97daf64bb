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

#include <cmath>
#include <cstddef>

#include "pabed/table.h"

namespace pabed::kernels {

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the error when the addend is larger than the running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    compensation_ += other.compensation_;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct MaskedSum {
  double total = 0.0;
  std::size_t non_null = 0;
};

struct MaskedWeightedSum {
  double weighted_total = 0.0;  // sum of weight * value
  double weight_total = 0.0;
  std::size_t rows = 0;         // rows where both sides are non-null
};

// Rows per reduction block. Partials are merged in block order, so results
// do not depend on the thread count.
inline constexpr std::size_t kBlockRows = 16384;

/// Sum of the non-null entries of an INT64 or FLOAT64 column, widened to
/// double. Throws Error(kTypeMismatch) for other types.
MaskedSum masked_sum(const ColumnData& column);

/// Sums over rows where neither column is null. Both columns must be numeric
/// and of equal length.
MaskedWeightedSum masked_weighted_sum(const ColumnData& weight, const ColumnData& value);

namespace reference {
// One serial pass in row order; the baseline the blocked kernels are tested against.
MaskedSum masked_sum(const ColumnData& column);
MaskedWeightedSum masked_weighted_sum(const ColumnData& weight, const ColumnData& value);
}  // namespace reference

/// Threads OpenMP will use for the next parallel region (1 without OpenMP).
int max_threads() noexcept;
void set_threads(int n) noexcept;

}  // namespace pabed::kernels
