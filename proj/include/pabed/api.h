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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pabed/catalog.h"
#include "pabed/error.h"
#include "pabed/table_builder.h"

namespace pabed {

enum class ApiCode {
  kMissingParameter,
  kMalformedYear,
  kUnknownYear,
  kUnknownColumn,
  kTypeMismatch,
  kCsvSyntax,
  kUnauthorized,
  kPayloadTooLarge,
  kNotFound,
  kInternal,
};

std::string_view api_code_name(ApiCode code) noexcept;
/// Fixed mapping: 400 for MISSING_PARAMETER, MALFORMED_YEAR and CSV_SYNTAX;
/// 401 UNAUTHORIZED; 404 UNKNOWN_YEAR, UNKNOWN_COLUMN and NOT_FOUND;
/// 413 PAYLOAD_TOO_LARGE; 422 TYPE_MISMATCH; 500 INTERNAL.
int http_status(ApiCode code) noexcept;

struct ApiError {
  ApiCode code;
  std::string message;

  int status() const noexcept { return http_status(code); }
  nlohmann::json body() const;  // {"code": ..., "message": ...}
};

ApiError to_api_error(const Error& e);

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Looks up a request parameter; nullopt when absent.
using ParamLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Transport-independent request handling. Each method returns either a
/// success body or an ApiError body with the mapped status; nothing throws.
class ApiHandler {
 public:
  explicit ApiHandler(Catalog& catalog, IngestOptions defaults = {})
      : catalog_(catalog), defaults_(std::move(defaults)) {}

  ApiResponse list_datasets() const;
  ApiResponse ingest(std::string_view year_label, std::string_view csv_body, bool strict);
  ApiResponse compare(const ParamLookup& params) const;
  ApiResponse trend(const ParamLookup& params) const;
  ApiResponse schema(std::string_view year_label) const;

 private:
  Catalog& catalog_;
  IngestOptions defaults_;
};

}  // namespace pabed
