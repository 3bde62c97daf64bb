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

#include "pabed/catalog.h"

#include "pabed/error.h"
#include "pabed/snapshot.h"

namespace pabed {

Catalog::Catalog(std::filesystem::path root) : root_(std::move(root)) {
  std::error_code ec;
  std::filesystem::create_directories(*root_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create catalog directory " + root_->string());
  for (const auto& entry : std::filesystem::directory_iterator(*root_, ec)) {
    const auto& p = entry.path();
    if (!entry.is_regular_file() || p.extension() != kSnapshotExtension) continue;
    if (auto year = AcademicYearId::try_parse(p.stem().string())) {
      entries_.emplace(*year, Entry{});
    }
  }
  if (ec) throw Error(ErrorCode::kIo, "cannot list catalog directory " + root_->string());
}

std::filesystem::path Catalog::snapshot_path(const AcademicYearId& year) const {
  if (!root_) return {};
  return *root_ / (year.label() + std::string(kSnapshotExtension));
}

void Catalog::register_table(std::shared_ptr<const Table> table) {
  std::unique_lock lock(mutex_);
  auto& e = entries_[table->year()];
  e.table = std::move(table);
  e.generation = next_generation_++;
}

void Catalog::publish(std::shared_ptr<const Table> table) {
  std::lock_guard guard(publish_mutex_);
  if (root_) write_snapshot(*table, snapshot_path(table->year()));
  register_table(std::move(table));
}

std::shared_ptr<const Table> Catalog::lookup(const AcademicYearId& year) const {
  std::uint64_t generation = 0;
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(year);
    if (it == entries_.end()) {
      throw Error(ErrorCode::kUnknownYear, "no table registered for " + year.label());
    }
    if (it->second.table) return it->second.table;
    generation = it->second.generation;
  }
  // Load outside the lock; keep whatever a concurrent register published.
  auto loaded = std::make_shared<const Table>(read_snapshot(snapshot_path(year)));
  std::unique_lock lock(mutex_);
  auto& e = entries_[year];
  if (e.table && e.generation != generation) return e.table;
  if (!e.table) e.table = std::move(loaded);
  return e.table;
}

std::shared_ptr<const Table> Catalog::lookup(std::string_view label) const {
  return lookup(AcademicYearId::parse(label));
}

bool Catalog::contains(const AcademicYearId& year) const {
  std::shared_lock lock(mutex_);
  return entries_.contains(year);
}

std::vector<AcademicYearId> Catalog::list_years() const {
  std::shared_lock lock(mutex_);
  std::vector<AcademicYearId> out;
  for (const auto& [year, _] : entries_) out.push_back(year);
  return out;
}

std::vector<AcademicYearId> Catalog::years_in_range(const AcademicYearId& from,
                                                    const AcademicYearId& to) const {
  std::shared_lock lock(mutex_);
  std::vector<AcademicYearId> out;
  for (auto it = entries_.lower_bound(from); it != entries_.end() && !(to < it->first); ++it) {
    out.push_back(it->first);
  }
  return out;
}

}  // namespace pabed
