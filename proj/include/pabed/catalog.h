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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "pabed/academic_year.h"
#include "pabed/table.h"

namespace pabed {

/// Year-keyed set of immutable tables.
///
/// At most one table per year; iteration is by ascending start year. Readers
/// get a shared_ptr to whichever table was published when they looked, so a
/// lookup racing a register sees the old or the new table, never a mix.
///
/// A catalog with a root directory persists each published table as
/// `<root>/<label>.pbed` and, when opened, indexes the existing snapshots and
/// loads each one on first use.
class Catalog {
 public:
  /// Memory-only catalog.
  Catalog() = default;
  /// Creates `root` if missing. Throws Error(kIo).
  explicit Catalog(std::filesystem::path root);

  Catalog(const Catalog&) = delete;
  Catalog& operator=(const Catalog&) = delete;

  /// Replaces any table for the same year. Does not touch disk.
  void register_table(std::shared_ptr<const Table> table);
  /// Snapshot (when rooted) then register. Publications are serialized.
  void publish(std::shared_ptr<const Table> table);

  /// Throws Error(kUnknownYear), or Error(kFormat)/Error(kIo) if a lazily
  /// loaded snapshot is unreadable.
  std::shared_ptr<const Table> lookup(const AcademicYearId& year) const;
  /// Parses first; throws Error(kMalformedYear) for a bad label.
  std::shared_ptr<const Table> lookup(std::string_view label) const;

  bool contains(const AcademicYearId& year) const;
  std::vector<AcademicYearId> list_years() const;
  /// Registered years with from <= year <= to, ascending.
  std::vector<AcademicYearId> years_in_range(const AcademicYearId& from,
                                             const AcademicYearId& to) const;

  const std::optional<std::filesystem::path>& root() const noexcept { return root_; }
  std::filesystem::path snapshot_path(const AcademicYearId& year) const;

 private:
  struct Entry {
    std::shared_ptr<const Table> table;  // null until loaded
    std::uint64_t generation = 0;
  };

  std::optional<std::filesystem::path> root_;
  mutable std::shared_mutex mutex_;
  mutable std::map<AcademicYearId, Entry> entries_;
  std::mutex publish_mutex_;
  std::uint64_t next_generation_ = 1;
};

}  // namespace pabed
