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

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace pabed {

/// A school year such as 1996_97. Tables are keyed and ordered by it.
///
/// The canonical label is `YYYY_YY` where the two-digit suffix is
/// (start_year + 1) mod 100, so 1999_00 is valid and 1996_98 is not.
/// Start years are limited to 1900..2099.
class AcademicYearId {
 public:
  static constexpr int kMinStartYear = 1900;
  static constexpr int kMaxStartYear = 2099;

  /// Throws Error(kMalformedYear).
  static AcademicYearId parse(std::string_view label);
  static std::optional<AcademicYearId> try_parse(std::string_view label) noexcept;
  static AcademicYearId from_start_year(int start_year);

  int start_year() const noexcept { return start_year_; }
  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const AcademicYearId& a, const AcademicYearId& b) noexcept {
    return a.start_year_ == b.start_year_;
  }
  friend std::strong_ordering operator<=>(const AcademicYearId& a,
                                          const AcademicYearId& b) noexcept {
    return a.start_year_ <=> b.start_year_;
  }

 private:
  explicit AcademicYearId(int start_year);

  int start_year_;
  std::string label_;
};

}  // namespace pabed

template <>
struct std::hash<pabed::AcademicYearId> {
  std::size_t operator()(const pabed::AcademicYearId& y) const noexcept {
    return std::hash<int>{}(y.start_year());
  }
};
