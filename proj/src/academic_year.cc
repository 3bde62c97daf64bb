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

#include "pabed/academic_year.h"

#include <cstdio>

#include "pabed/error.h"

namespace pabed {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::optional<int> parse_start(std::string_view label) {
  if (label.size() != 7 || label[4] != '_') return std::nullopt;
  for (std::size_t i : {0, 1, 2, 3, 5, 6}) {
    if (!is_digit(label[i])) return std::nullopt;
  }
  int start = 0;
  for (std::size_t i = 0; i < 4; ++i) start = start * 10 + (label[i] - '0');
  int suffix = (label[5] - '0') * 10 + (label[6] - '0');
  if (start < AcademicYearId::kMinStartYear || start > AcademicYearId::kMaxStartYear) {
    return std::nullopt;
  }
  if (suffix != (start + 1) % 100) return std::nullopt;
  return start;
}

}  // namespace

AcademicYearId::AcademicYearId(int start_year) : start_year_(start_year) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d_%02d", start_year, (start_year + 1) % 100);
  label_ = buf;
}

AcademicYearId AcademicYearId::parse(std::string_view label) {
  if (auto start = parse_start(label)) return AcademicYearId(*start);
  throw Error(ErrorCode::kMalformedYear,
              "malformed academic year '" + std::string(label) +
                  "': expected YYYY_YY with consecutive years, e.g. 1996_97");
}

std::optional<AcademicYearId> AcademicYearId::try_parse(std::string_view label) noexcept {
  if (auto start = parse_start(label)) return AcademicYearId(*start);
  return std::nullopt;
}

AcademicYearId AcademicYearId::from_start_year(int start_year) {
  if (start_year < kMinStartYear || start_year > kMaxStartYear) {
    throw Error(ErrorCode::kMalformedYear,
                "academic start year " + std::to_string(start_year) + " outside 1900..2099");
  }
  return AcademicYearId(start_year);
}

}  // namespace pabed
