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

#include "pabed/aggregate.h"

#include "pabed/error.h"
#include "pabed/kernels.h"

namespace pabed {
namespace {

// All-null columns infer as STRING, but carry no values that could make them
// non-numeric, so they aggregate as empty numeric columns.
bool all_null(const ColumnData& c) { return c.non_null_count() == 0; }

}  // namespace

AggregateResult sum_column(const Table& table, const MeasureRef& measure) {
  const ColumnData& column = table.column(measure.column_name);
  kernels::MaskedSum s = all_null(column) ? kernels::MaskedSum{} : kernels::masked_sum(column);
  return AggregateResult{
      .year = table.year(),
      .measure = measure,
      .total = s.non_null == 0 ? 0.0 : s.total,
      .non_null_rows = s.non_null,
      .null_rows = table.row_count() - s.non_null,
  };
}

ComparisonResult compare_years(const Catalog& catalog, const AcademicYearId& year1,
                               const AcademicYearId& year2, const MeasureRef& measure) {
  auto first_table = catalog.lookup(year1);
  auto second_table = catalog.lookup(year2);
  AggregateResult first = sum_column(*first_table, measure);
  AggregateResult second = sum_column(*second_table, measure);
  const double delta = second.total - first.total;
  std::optional<double> pct;
  if (first.total != 0.0) pct = delta / first.total * 100.0;
  return ComparisonResult{std::move(first), std::move(second), delta, pct};
}

TrendSeries trend_series(const Catalog& catalog, const AcademicYearId& from,
                         const AcademicYearId& to, const MeasureRef& measure) {
  if (to < from) {
    throw Error(ErrorCode::kMalformedYear,
                "range start " + from.label() + " is after range end " + to.label());
  }
  auto years = catalog.years_in_range(from, to);
  if (years.empty()) {
    throw Error(ErrorCode::kEmptyRange,
                "no registered year between " + from.label() + " and " + to.label());
  }
  TrendSeries series{measure, {}};
  series.points.reserve(years.size());
  for (const auto& year : years) {
    AggregateResult r = sum_column(*catalog.lookup(year), measure);
    series.points.push_back({year, r.total, r.non_null_rows});
  }
  return series;
}

std::optional<double> weighted_mean(const Table& table, const MeasureRef& weight,
                                    const MeasureRef& value) {
  const ColumnData& w = table.column(weight.column_name);
  const ColumnData& v = table.column(value.column_name);
  if (all_null(w) || all_null(v)) return std::nullopt;
  kernels::MaskedWeightedSum s = kernels::masked_weighted_sum(w, v);
  if (s.rows == 0 || s.weight_total == 0.0) return std::nullopt;
  return s.weighted_total / s.weight_total;
}

}  // namespace pabed
