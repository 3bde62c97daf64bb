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

#include "pabed/api.h"

#include <memory>
#include <stdexcept>

#include "pabed/aggregate.h"
#include "pabed/json_codec.h"

namespace pabed {

std::string_view api_code_name(ApiCode code) noexcept {
  switch (code) {
    case ApiCode::kMissingParameter: return "MISSING_PARAMETER";
    case ApiCode::kMalformedYear: return "MALFORMED_YEAR";
    case ApiCode::kUnknownYear: return "UNKNOWN_YEAR";
    case ApiCode::kUnknownColumn: return "UNKNOWN_COLUMN";
    case ApiCode::kTypeMismatch: return "TYPE_MISMATCH";
    case ApiCode::kCsvSyntax: return "CSV_SYNTAX";
    case ApiCode::kUnauthorized: return "UNAUTHORIZED";
    case ApiCode::kPayloadTooLarge: return "PAYLOAD_TOO_LARGE";
    case ApiCode::kNotFound: return "NOT_FOUND";
    case ApiCode::kInternal: return "INTERNAL";
  }
  return "INTERNAL";
}

int http_status(ApiCode code) noexcept {
  switch (code) {
    case ApiCode::kMissingParameter:
    case ApiCode::kMalformedYear:
    case ApiCode::kCsvSyntax: return 400;
    case ApiCode::kUnauthorized: return 401;
    case ApiCode::kUnknownYear:
    case ApiCode::kUnknownColumn:
    case ApiCode::kNotFound: return 404;
    case ApiCode::kPayloadTooLarge: return 413;
    case ApiCode::kTypeMismatch: return 422;
    case ApiCode::kInternal: return 500;
  }
  return 500;
}

nlohmann::json ApiError::body() const {
  return {{"code", std::string(api_code_name(code))}, {"message", message}};
}

ApiError to_api_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kMalformedYear: return {ApiCode::kMalformedYear, e.what()};
    case ErrorCode::kCsvSyntax:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kCoercion: return {ApiCode::kCsvSyntax, e.what()};
    case ErrorCode::kUnknownYear:
    case ErrorCode::kEmptyRange: return {ApiCode::kUnknownYear, e.what()};
    case ErrorCode::kUnknownColumn: return {ApiCode::kUnknownColumn, e.what()};
    case ErrorCode::kTypeMismatch: return {ApiCode::kTypeMismatch, e.what()};
    case ErrorCode::kIo:
    case ErrorCode::kFormat: return {ApiCode::kInternal, e.what()};
  }
  return {ApiCode::kInternal, e.what()};
}

namespace {

class MissingParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ApiResponse failure(const ApiError& e) { return {e.status(), e.body()}; }

template <typename F>
ApiResponse guarded(F&& f) {
  try {
    return ApiResponse{200, f()};
  } catch (const MissingParameter& e) {
    return failure({ApiCode::kMissingParameter, e.what()});
  } catch (const Error& e) {
    return failure(to_api_error(e));
  } catch (const std::exception& e) {
    return failure({ApiCode::kInternal, e.what()});
  }
}

std::string required(const ParamLookup& params, std::string_view name) {
  auto v = params(name);
  if (!v || v->empty()) {
    throw MissingParameter("missing required parameter '" + std::string(name) + "'");
  }
  return *v;
}

MeasureRef measure_param(const ParamLookup& params) {
  auto v = params("column");
  if (!v || v->empty()) return MeasureRef{};
  return MeasureRef{*v};
}

}  // namespace

ApiResponse ApiHandler::list_datasets() const {
  return guarded([&] { return json::to_json(json::list_datasets(catalog_)); });
}

ApiResponse ApiHandler::ingest(std::string_view year_label, std::string_view csv_body,
                               bool strict) {
  return guarded([&] {
    AcademicYearId year = AcademicYearId::parse(year_label);
    IngestOptions options = defaults_;
    options.csv.strict = options.csv.strict || strict;
    BuiltTable built = ingest_csv(csv_body, year, options);
    catalog_.publish(std::make_shared<const Table>(std::move(built.table)));
    return json::to_json(built.report);
  });
}

ApiResponse ApiHandler::compare(const ParamLookup& params) const {
  return guarded([&] {
    std::string y1 = required(params, "year1");
    std::string y2 = required(params, "year2");
    return json::to_json(compare_years(catalog_, AcademicYearId::parse(y1),
                                       AcademicYearId::parse(y2), measure_param(params)));
  });
}

ApiResponse ApiHandler::trend(const ParamLookup& params) const {
  return guarded([&] {
    std::string from = required(params, "from");
    std::string to = required(params, "to");
    return json::to_json(trend_series(catalog_, AcademicYearId::parse(from),
                                      AcademicYearId::parse(to), measure_param(params)));
  });
}

ApiResponse ApiHandler::schema(std::string_view year_label) const {
  return guarded([&] { return json::schema_json(*catalog_.lookup(year_label)); });
}

}  // namespace pabed
