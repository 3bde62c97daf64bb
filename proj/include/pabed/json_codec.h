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
#include <vector>

#include "json.hpp"
#include "pabed/aggregate.h"
#include "pabed/catalog.h"
#include "pabed/table.h"
#include "pabed/table_builder.h"

// JSON shapes shared by the HTTP API and `pabed ... --format json`, so the
// two interfaces stay field-for-field identical.
namespace pabed::json {

using nlohmann::json;

struct DatasetInfo {
  AcademicYearId year;
  std::size_t row_count = 0;
  std::size_t column_count = 0;
};

std::vector<DatasetInfo> list_datasets(const Catalog& catalog);

json to_json(const AggregateResult& r);
json to_json(const ComparisonResult& r);
json to_json(const TrendSeries& s);
json to_json(const IngestReport& r);
json to_json(const std::vector<DatasetInfo>& datasets);
// {"columns": [{"name", "type", "null_count"}]}
json schema_json(const Table& table);

}  // namespace pabed::json
