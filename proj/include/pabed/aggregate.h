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
#include <optional>
#include <string>
#include <vector>

#include "pabed/academic_year.h"
#include "pabed/catalog.h"
#include "pabed/table.h"

namespace pabed {

inline constexpr const char* kDefaultMeasure = "UGDS";

/// Names the numeric column an aggregate reads.
struct MeasureRef {
  std::string column_name = kDefaultMeasure;
};

struct AggregateResult {
  AcademicYearId year;
  MeasureRef measure;
  double total = 0.0;  // 0 when non_null_rows == 0
  std::size_t non_null_rows = 0;
  std::size_t null_rows = 0;
};

struct ComparisonResult {
  AggregateResult first;
  AggregateResult second;
  double delta = 0.0;                // second.total - first.total
  std::optional<double> pct_change;  // delta / first.total * 100, unset when first.total == 0
};

struct TrendPoint {
  AcademicYearId year;
  double total = 0.0;
  std::size_t non_null_rows = 0;
};

struct TrendSeries {
  MeasureRef measure;
  std::vector<TrendPoint> points;  // ascending by start year
};

/// Compensated sum of the non-null entries. INT64 is widened to double. An
/// all-null column of any type sums to 0 with non_null_rows == 0.
/// Throws Error(kUnknownColumn) or Error(kTypeMismatch).
AggregateResult sum_column(const Table& table, const MeasureRef& measure = {});

/// Totals for two registered years. Institutions are not matched across
/// years; each total covers whatever rows its own table holds.
/// Throws Error(kUnknownYear), Error(kUnknownColumn), Error(kTypeMismatch).
ComparisonResult compare_years(const Catalog& catalog, const AcademicYearId& year1,
                               const AcademicYearId& year2, const MeasureRef& measure = {});

/// One point per registered year in [from, to]; unregistered years are
/// skipped, not zero-filled.
/// Throws Error(kMalformedYear) when from > to and Error(kEmptyRange) when no
/// registered year falls in the range.
TrendSeries trend_series(const Catalog& catalog, const AcademicYearId& from,
                         const AcademicYearId& to, const MeasureRef& measure = {});

/// sum(w * v) / sum(w) over rows where both are non-null. Unset when there
/// are no such rows or the weights sum to zero.
std::optional<double> weighted_mean(const Table& table, const MeasureRef& weight,
                                    const MeasureRef& value);

}  // namespace pabed
