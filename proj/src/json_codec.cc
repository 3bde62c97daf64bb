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

#include "pabed/json_codec.h"

namespace pabed::json {

std::vector<DatasetInfo> list_datasets(const Catalog& catalog) {
  std::vector<DatasetInfo> out;
  for (const auto& year : catalog.list_years()) {
    auto table = catalog.lookup(year);
    out.push_back({year, table->row_count(), table->column_count()});
  }
  return out;
}

json to_json(const AggregateResult& r) {
  return {
      {"year", r.year.label()},
      {"column", r.measure.column_name},
      {"total", r.total},
      {"non_null_rows", r.non_null_rows},
      {"null_rows", r.null_rows},
  };
}

json to_json(const ComparisonResult& r) {
  json out = {
      {"first", to_json(r.first)},
      {"second", to_json(r.second)},
      {"delta", r.delta},
  };
  out["pct_change"] = r.pct_change ? json(*r.pct_change) : json(nullptr);
  return out;
}

json to_json(const TrendSeries& s) {
  json points = json::array();
  for (const auto& p : s.points) {
    points.push_back({{"year", p.year.label()}, {"total", p.total}, {"non_null_rows", p.non_null_rows}});
  }
  return {{"column", s.measure.column_name}, {"points", std::move(points)}};
}

json to_json(const IngestReport& r) {
  return {
      {"table_name", r.table_name},
      {"row_count", r.row_count},
      {"column_count", r.column_count},
      {"null_cells", r.null_cells},
      {"coercion_warnings", r.coercion_warnings},
      {"elapsed_ms", r.elapsed_ms},
  };
}

json to_json(const std::vector<DatasetInfo>& datasets) {
  json out = json::array();
  for (const auto& d : datasets) {
    out.push_back({{"year", d.year.label()},
                   {"row_count", d.row_count},
                   {"column_count", d.column_count}});
  }
  return out;
}

json schema_json(const Table& table) {
  json columns = json::array();
  for (const auto& c : table.columns()) {
    columns.push_back({{"name", c.name()},
                       {"type", std::string(type_name(c.type()))},
                       {"null_count", c.null_count()}});
  }
  return {{"columns", std::move(columns)}};
}

}  // namespace pabed::json
