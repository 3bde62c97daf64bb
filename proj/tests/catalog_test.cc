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

#include <gtest/gtest.h>

#include <atomic>
#include <fstream>
#include <thread>

#include "pabed/error.h"
#include "pabed/snapshot.h"
#include "pabed/table_builder.h"
#include "random_table.h"

namespace pabed {
namespace {

std::shared_ptr<const Table> table_for(std::string_view label, std::size_t rows = 3) {
  return std::make_shared<const Table>(Table(AcademicYearId::parse(label), rows));
}

ErrorCode lookup_failure(const Catalog& catalog, std::string_view label) {
  try {
    catalog.lookup(label);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(CatalogTest, RegisterThenLookup) {
  Catalog catalog;
  auto t = table_for("1996_97");
  catalog.register_table(t);
  EXPECT_EQ(catalog.lookup("1996_97"), t);
}

TEST(CatalogTest, SecondRegistrationReplacesFirst) {
  Catalog catalog;
  catalog.register_table(table_for("1996_97", 1));
  auto second = table_for("1996_97", 2);
  catalog.register_table(second);
  EXPECT_EQ(catalog.lookup("1996_97"), second);
  EXPECT_EQ(catalog.list_years().size(), 1u);
}

TEST(CatalogTest, EightYearsListAscending) {
  Catalog catalog;
  for (int y : {2003, 1998, 1996, 2001, 1999, 2000, 1997, 2002}) {
    catalog.register_table(
        std::make_shared<const Table>(Table(AcademicYearId::from_start_year(y), 1)));
  }
  auto years = catalog.list_years();
  ASSERT_EQ(years.size(), 8u);
  EXPECT_EQ(years.front().label(), "1996_97");
  EXPECT_EQ(years.back().label(), "2003_04");
  for (std::size_t i = 1; i < years.size(); ++i) {
    EXPECT_LT(years[i - 1].start_year(), years[i].start_year());
  }
}

TEST(CatalogTest, LookupErrors) {
  Catalog catalog;
  catalog.register_table(table_for("2003_04"));
  EXPECT_NO_THROW(catalog.lookup("2003_04"));
  EXPECT_EQ(lookup_failure(catalog, "1888_89"), ErrorCode::kMalformedYear);
  EXPECT_EQ(lookup_failure(catalog, "1990_91"), ErrorCode::kUnknownYear);
  EXPECT_EQ(lookup_failure(catalog, "2003-04"), ErrorCode::kMalformedYear);
}

TEST(CatalogTest, YearsInRangeSkipsGaps) {
  Catalog catalog;
  for (int y : {1996, 1997, 1999, 2003}) {
    catalog.register_table(
        std::make_shared<const Table>(Table(AcademicYearId::from_start_year(y), 1)));
  }
  auto years = catalog.years_in_range(AcademicYearId::parse("1997_98"),
                                      AcademicYearId::parse("2002_03"));
  ASSERT_EQ(years.size(), 2u);
  EXPECT_EQ(years[0].label(), "1997_98");
  EXPECT_EQ(years[1].label(), "1999_00");
}

TEST(CatalogTest, PublishedTablesSurviveReopen) {
  testing::TempDir dir;
  testing::SplitMix64 rng(1);
  Table original = testing::random_table(rng, AcademicYearId::parse("1997_98"));
  {
    Catalog catalog(dir.path());
    catalog.publish(std::make_shared<const Table>(original));
    EXPECT_TRUE(std::filesystem::exists(dir.path() / "1997_98.pbed"));
  }
  // Files that are not year snapshots are ignored.
  std::ofstream(dir.path() / "notes.txt") << "x";
  std::ofstream(dir.path() / "latest.pbed") << "x";

  Catalog reopened(dir.path());
  ASSERT_EQ(reopened.list_years().size(), 1u);
  EXPECT_TRUE(*reopened.lookup("1997_98") == original);
  // Loaded once, then shared.
  EXPECT_EQ(reopened.lookup("1997_98"), reopened.lookup("1997_98"));
}

TEST(CatalogTest, CorruptSnapshotSurfacesFormatError) {
  testing::TempDir dir;
  std::ofstream(dir.path() / "2000_01.pbed") << "PBEDgarbage";
  Catalog catalog(dir.path());
  EXPECT_EQ(lookup_failure(catalog, "2000_01"), ErrorCode::kFormat);
}

// A lookup racing register returns exactly the old or the new table.
TEST(CatalogTest, ConcurrentReadersSeeWholeTables) {
  Catalog catalog;
  const auto year = AcademicYearId::parse("1996_97");
  std::vector<std::shared_ptr<const Table>> versions;
  testing::SplitMix64 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto buf = testing::make_numeric_csv(rng, 200 + static_cast<std::size_t>(i), 3, 0.1);
    versions.push_back(std::make_shared<const Table>(ingest_csv(buf, year).table));
  }
  catalog.register_table(versions[0]);

  std::atomic<bool> done{false};
  std::atomic<int> mismatches{0};
  std::vector<std::thread> readers;
  for (int r = 0; r < 4; ++r) {
    readers.emplace_back([&] {
      while (!done) {
        auto t = catalog.lookup(year);
        bool known = false;
        for (const auto& v : versions) known |= (v == t);
        // Row count identifies the version; all columns must agree with it.
        for (const auto& c : t->columns()) {
          if (c.size() != t->row_count()) ++mismatches;
        }
        if (!known) ++mismatches;
      }
    });
  }
  for (const auto& v : versions) catalog.register_table(v);
  done = true;
  for (auto& t : readers) t.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_EQ(catalog.lookup(year), versions.back());
}

}  // namespace
}  // namespace pabed
