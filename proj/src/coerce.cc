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

#include "pabed/coerce.h"

#include <charconv>
#include <cmath>

#include "pabed/error.h"

namespace pabed {

NullTokenSet::NullTokenSet() : NullTokenSet({"", "NULL", "null", "PrivacySuppressed"}) {}

NullTokenSet::NullTokenSet(std::initializer_list<std::string_view> tokens) {
  for (auto t : tokens) {
    if (!t.empty()) tokens_.emplace_back(t);
  }
}

NullTokenSet::NullTokenSet(const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) {
    if (!t.empty()) tokens_.push_back(t);
  }
}

namespace {

// Drops one leading '+'. Returns false for "+" followed by another sign.
bool strip_plus(std::string_view& s) noexcept {
  if (s.empty() || s.front() != '+') return true;
  s.remove_prefix(1);
  return !s.empty() && s.front() != '+' && s.front() != '-';
}

}  // namespace

std::optional<std::int64_t> parse_int64(std::string_view s) noexcept {
  if (!strip_plus(s) || s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_float64(std::string_view s) noexcept {
  if (!strip_plus(s) || s.empty()) return std::nullopt;
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != '.' && c != 'e' && c != 'E' && c != '-' && c != '+') {
      return std::nullopt;
    }
  }
  if (!digit) return std::nullopt;
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(std::string_view s) noexcept {
  auto iequals = [](std::string_view a, std::string_view lower) {
    if (a.size() != lower.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char c = a[i];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != lower[i]) return false;
    }
    return true;
  };
  if (iequals(s, "true")) return true;
  if (iequals(s, "false")) return false;
  return std::nullopt;
}

Value coerce_value(std::string_view cell, ColumnType target, CoercionMode mode,
                   const NullTokenSet& nulls, std::size_t& warnings) {
  if (nulls.contains(cell)) return std::monostate{};
  Value out;
  switch (target) {
    case ColumnType::kInt64:
      if (auto v = parse_int64(cell)) out = *v;
      break;
    case ColumnType::kFloat64:
      if (auto v = parse_float64(cell)) out = *v;
      break;
    case ColumnType::kBool:
      if (auto v = parse_bool(cell)) out = *v;
      break;
    case ColumnType::kString:
      return std::string(cell);
  }
  if (std::holds_alternative<std::monostate>(out)) {
    if (mode == CoercionMode::kStrict) {
      throw Error(ErrorCode::kCoercion, "cannot convert '" + std::string(cell) + "' to " +
                                            std::string(type_name(target)));
    }
    ++warnings;
  }
  return out;
}

Value coerce_value(std::string_view cell, ColumnType target, CoercionMode mode) {
  std::size_t warnings = 0;
  return coerce_value(cell, target, mode, NullTokenSet{}, warnings);
}

}  // namespace pabed
