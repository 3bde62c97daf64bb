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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs without the dashboard.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frozen_values.h"
#include "httplib.h"
#include "json.hpp"
#include "pabed/aggregate.h"
#include "pabed/error.h"
#include "pabed/server.h"
#include "pabed/snapshot.h"
#include "pabed/table_builder.h"
#include "random_table.h"
#include "test_support.h"

namespace {

using namespace pabed;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failures of one criterion.
class Check {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 5) detail_ << "\n    " << why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    if (failures_ <= 5) return detail_.str();
    return detail_.str() + "\n    ... " + std::to_string(failures_ - 5) + " more";
  }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
};

struct Outcome {
  bool pass;
  std::string summary;
};

Outcome oracle_equivalence() {
  Check check;
  testing::SplitMix64 rng(2024);
  auto start = Clock::now();
  std::size_t columns_checked = 0, pairs_checked = 0;
  const auto year = AcademicYearId::parse("1996_97");
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = i == 0 ? 0 : 1 + rng.below(10000);
    const std::size_t cols = 1 + rng.below(20);
    const double null_fraction = i == 1 ? 1.0 : i == 2 ? 0.0 : rng.uniform();
    std::string text = testing::make_numeric_csv(rng, rows, cols, null_fraction);
    auto split = testing::naive_split(text);
    Table table = ingest_csv(text, year).table;
    const std::string tag = "fixture " + std::to_string(i) + " ";

    for (const auto& name : split.header) {
      auto oracle = testing::oracle_sum(split, name);
      try {
        auto r = sum_column(table, {name});
        check.expect(testing::within_relative(r.total, oracle.total, 1e-9),
                     tag + name + " total " + std::to_string(r.total) + " vs " +
                         std::to_string(oracle.total));
        check.expect(r.non_null_rows == oracle.non_null && r.null_rows == oracle.nulls,
                     tag + name + " counts differ");
      } catch (const std::exception& e) {
        check.fail(tag + name + ": " + e.what());
      }
      ++columns_checked;
    }
    for (std::size_t c = 0; c + 1 < split.header.size(); ++c) {
      const auto& w = split.header[c];
      const auto& v = split.header[c + 1];
      auto oracle = testing::oracle_weighted_mean(split, w, v);
      try {
        auto m = weighted_mean(table, {w}, {v});
        if (m.has_value() != oracle.mean.has_value()) {
          check.fail(tag + w + "/" + v + " weighted mean presence differs");
        } else if (m) {
          check.expect(testing::within_relative(*m, *oracle.mean, 1e-9),
                       tag + w + "/" + v + " weighted mean differs");
        }
      } catch (const std::exception& e) {
        check.fail(tag + w + "/" + v + ": " + e.what());
      }
      ++pairs_checked;
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "50 fixtures, %zu sums, %zu weighted means, %.2f s",
                columns_checked, pairs_checked, elapsed);
  return {check.ok(), buf + check.detail()};
}

Outcome schema_inference() {
  Check check;
  struct Case {
    const char* cells;  // newline-separated column cells
    ColumnType expected;
  };
  const std::vector<Case> matrix = {
      {"1\n2\n3", ColumnType::kInt64},
      {"1.5\n2.25", ColumnType::kFloat64},
      {"1\n2.5", ColumnType::kFloat64},              // INT -> FLOAT
      {"2.5\n1", ColumnType::kFloat64},
      {"1\nabc", ColumnType::kString},               // INT -> STRING
      {"1.5\nabc", ColumnType::kString},             // FLOAT -> STRING
      {"1\n2.5\nabc", ColumnType::kString},
      {"true\nfalse", ColumnType::kBool},
      {"TRUE\nFalse", ColumnType::kBool},
      {"true\n1", ColumnType::kString},              // BOOL + INT
      {"false\n1.5", ColumnType::kString},           // BOOL + FLOAT
      {"true\nyes", ColumnType::kString},            // BOOL + STRING
      {"NULL\nNULL", ColumnType::kString},           // all-null
      {"\nPrivacySuppressed\nnull", ColumnType::kString},
      {"NULL\n7\nPrivacySuppressed", ColumnType::kInt64},
      {"null\n7.5", ColumnType::kFloat64},
      {"NULL\ntrue", ColumnType::kBool},
      {"-12\n+3", ColumnType::kInt64},
      {"1e3\n4", ColumnType::kFloat64},
      {"9223372036854775807", ColumnType::kInt64},
      {"9223372036854775808", ColumnType::kFloat64},
      {"nan", ColumnType::kString},
  };

  std::size_t checked = 0;
  testing::SplitMix64 rng(7);
  std::mt19937_64 shuffler(7);
  for (const auto& c : matrix) {
    std::vector<std::string> cells = testing::split_line(c.cells, '\n');
    for (int perm = 0; perm < 20; ++perm) {
      // Pad with nulls, then shuffle rows; the inferred type must not move.
      std::vector<std::string> rows = cells;
      for (std::size_t k = rng.below(4); k > 0; --k) rows.push_back("NULL");
      std::shuffle(rows.begin(), rows.end(), shuffler);
      std::string text = "x,id\n";
      for (std::size_t r = 0; r < rows.size(); ++r) text += rows[r] + "," + std::to_string(r) + "\n";
      ColumnType got = infer_schema(read_csv(text))[0].type;
      check.expect(got == c.expected, std::string("cells {") + c.cells + "} inferred " +
                                          std::string(type_name(got)) + ", expected " +
                                          std::string(type_name(c.expected)));
      ++checked;
    }
  }

  // Whole-file permutation invariance on mixed fixtures.
  for (int i = 0; i < 20; ++i) {
    std::string text = testing::make_scorecard_year(1996 + i % 8, 400, 100 + i);
    auto split = testing::naive_split(text);
    auto expected = infer_schema(read_csv(text));
    check.expect(expected[3].type == ColumnType::kInt64 && expected[4].type == ColumnType::kFloat64 &&
                     expected[1].type == ColumnType::kString && expected[5].type == ColumnType::kBool,
                 "Scorecard column types");
    std::shuffle(split.rows.begin(), split.rows.end(), shuffler);
    std::string shuffled;
    for (std::size_t c = 0; c < split.header.size(); ++c) {
      shuffled += (c ? "," : "") + split.header[c];
    }
    shuffled += "\n";
    for (const auto& row : split.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) shuffled += (c ? "," : "") + row[c];
      shuffled += "\n";
    }
    check.expect(infer_schema(read_csv(shuffled)) == expected, "shuffled rows changed schema");
    ++checked;
  }
  return {check.ok(), std::to_string(matrix.size()) + " lattice cases, " + std::to_string(checked) +
                          " inferences" + check.detail()};
}

struct LiveServer {
  explicit LiveServer(ServerConfig config = {}) : catalog(dir.path()) {
    config.port = 0;
    server = std::make_unique<Server>(config, catalog);
    port = server->start();
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(120);
    client->set_write_timeout(120);
  }
  ~LiveServer() { server->stop(); }

  testing::TempDir dir;
  Catalog catalog;
  std::unique_ptr<Server> server;
  std::unique_ptr<httplib::Client> client;
  int port = 0;
};

const testing::FrozenYearTotal* frozen_for(int start_year) {
  for (const auto& f : testing::kScorecardTotals) {
    if (f.start_year == start_year) return &f;
  }
  return nullptr;
}

Outcome end_to_end() {
  Check check;
  LiveServer live;
  std::vector<std::string> files;
  for (int y = 1996; y <= 2003; ++y) {
    files.push_back(testing::make_scorecard_year(y, testing::kScorecardRows, y));
  }

  auto start = Clock::now();
  for (int y = 1996; y <= 2003; ++y) {
    auto label = AcademicYearId::from_start_year(y).label();
    auto r = live.client->Post("/api/v1/datasets/" + label, files[y - 1996], "text/csv");
    check.expect(r && r->status == 200, "upload " + label + " failed");
  }
  auto cmp = live.client->Get("/api/v1/compare?year1=1996_97&year2=2003_04");
  auto trend = live.client->Get("/api/v1/trend?from=1996_97&to=2003_04");
  const double elapsed = seconds_since(start);

  if (!cmp || cmp->status != 200 || !trend || trend->status != 200) {
    check.fail("compare/trend request failed");
    return {false, check.detail()};
  }
  auto c = json::parse(cmp->body);
  for (auto [key, y] : {std::pair{"first", 1996}, std::pair{"second", 2003}}) {
    auto oracle = testing::oracle_sum(testing::naive_split(files[y - 1996]), "UGDS");
    const auto* frozen = frozen_for(y);
    double total = c[key]["total"].get<double>();
    check.expect(total == oracle.total, std::string(key) + " total differs from row-scan oracle");
    check.expect(frozen && total == frozen->total, std::string(key) + " total differs from frozen value");
    check.expect(c[key]["non_null_rows"] == oracle.non_null && c[key]["null_rows"] == oracle.nulls,
                 std::string(key) + " counts differ");
  }
  check.expect(c["delta"].get<double>() ==
                   c["second"]["total"].get<double>() - c["first"]["total"].get<double>(),
               "delta");

  auto t = json::parse(trend->body);
  const auto& points = t["points"];
  check.expect(points.size() == 8, "trend has " + std::to_string(points.size()) + " points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    int y = 1996 + static_cast<int>(i);
    check.expect(points[i]["year"] == AcademicYearId::from_start_year(y).label(),
                 "trend point " + std::to_string(i) + " out of order");
    const auto* frozen = frozen_for(y);
    check.expect(frozen && points[i]["total"].get<double>() == frozen->total,
                 "trend total for " + std::to_string(y));
  }
  check.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s >= 10 s");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "8 years over HTTP, totals %.0f -> %.0f, %.2f s",
                c["first"]["total"].get<double>(), c["second"]["total"].get<double>(), elapsed);
  return {check.ok(), buf + check.detail()};
}

Outcome validation_contract() {
  Check check;
  LiveServer live;
  live.client->Post("/api/v1/datasets/1996_97", "UGDS\n1\n", "text/csv");
  live.client->Post("/api/v1/datasets/2003_04", "UGDS\n2\n", "text/csv");
  const std::vector<std::string> queries = {
      "/api/v1/compare?year2=2003_04",
      "/api/v1/compare?year1=1996_97",
      "/api/v1/compare",
      "/api/v1/compare?year1=&year2=2003_04",
      "/api/v1/compare?year1=1996_97&year2=",
  };
  for (const auto& q : queries) {
    auto r = live.client->Get(q);
    if (!r) {
      check.fail(q + ": no response");
      continue;
    }
    check.expect(r->status == 400, q + " status " + std::to_string(r->status));
    check.expect(json::parse(r->body).value("code", "") == "MISSING_PARAMETER", q + " code");
  }
  auto ok = live.client->Get("/api/v1/compare?year1=1996_97&year2=2003_04");
  check.expect(ok && ok->status == 200, "complete request did not succeed");
  return {check.ok(), std::to_string(queries.size()) + " incomplete requests -> 400" + check.detail()};
}

Outcome snapshot_round_trip() {
  Check check;
  testing::SplitMix64 rng(99);
  const auto year = AcademicYearId::parse("2001_02");
  std::size_t mutants = 0;
  for (int i = 0; i < 100; ++i) {
    Table t = testing::random_table(rng, year, 400, 10);
    std::string bytes = serialize_table(t);
    try {
      Table back = deserialize_table(bytes, year);
      check.expect(back == t, "table " + std::to_string(i) + " changed on reload");
      bool bitmaps = back.column_count() == t.column_count();
      for (std::size_t c = 0; bitmaps && c < t.column_count(); ++c) {
        bitmaps = back.columns()[c].nulls() == t.columns()[c].nulls();
      }
      check.expect(bitmaps, "table " + std::to_string(i) + " null bitmap changed");
    } catch (const std::exception& e) {
      check.fail("table " + std::to_string(i) + ": " + e.what());
    }

    // Corrupt: random byte flips, truncations, and appended bytes.
    for (int k = 0; k < 40; ++k) {
      std::string bad = bytes;
      switch (rng.below(3)) {
        case 0: {
          std::size_t flips = 1 + rng.below(3);
          for (std::size_t f = 0; f < flips; ++f) {
            std::size_t pos = rng.below(bad.size());
            bad[pos] = static_cast<char>(bad[pos] ^ static_cast<char>(1 + rng.below(255)));
          }
          break;
        }
        case 1: bad.resize(rng.below(bad.size())); break;
        default: bad.push_back(static_cast<char>(rng.below(256))); break;
      }
      if (bad == bytes) continue;
      ++mutants;
      try {
        Table wrong = deserialize_table(bad, year);
        check.fail("corrupted table " + std::to_string(i) + " decoded without error");
      } catch (const Error& e) {
        check.expect(e.code() == ErrorCode::kFormat,
                     "corruption raised " + std::string(to_string(e.code())));
      } catch (const std::exception& e) {
        check.fail(std::string("corruption raised non-Error exception: ") + e.what());
      }
    }
  }
  return {check.ok(), "100 tables identical, " + std::to_string(mutants) +
                          " corrupted inputs all FormatError" + check.detail()};
}

// ~100 MB, 1M rows x 10 numeric columns.
std::string scale_fixture() {
  testing::SplitMix64 rng(5);
  std::string out = "UGDS,c1,c2,c3,c4,c5,c6,c7,c8,c9\n";
  out.reserve(std::size_t{110} << 20);
  char buf[32];
  for (std::size_t r = 0; r < 1'000'000; ++r) {
    for (int c = 0; c < 10; ++c) {
      if (c) out += ',';
      if (rng.below(20) == 0) {
        out += "NULL";
      } else if (c % 2 == 0) {
        out += std::to_string(rng.below(100000000));
      } else {
        std::snprintf(buf, sizeof(buf), "%.6f", rng.uniform() * 1e5);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

Outcome scale_anchor() {
  Check check;
  std::string text = scale_fixture();
  const double mb = static_cast<double>(text.size()) / (1 << 20);
  Catalog catalog;
  auto start = Clock::now();
  BuiltTable built = ingest_csv(text, AcademicYearId::parse("1996_97"));
  const double ingest_s = seconds_since(start);
  check.expect(built.report.row_count == 1'000'000 && built.report.column_count == 10,
               "unexpected table shape");
  catalog.register_table(std::make_shared<const Table>(std::move(built.table)));
  BuiltTable second = ingest_csv(text, AcademicYearId::parse("2003_04"));
  catalog.register_table(std::make_shared<const Table>(std::move(second.table)));
  text.clear();
  text.shrink_to_fit();

  auto q = Clock::now();
  auto r = compare_years(catalog, AcademicYearId::parse("1996_97"), AcademicYearId::parse("2003_04"));
  const double query_ms = seconds_since(q) * 1000.0;
  check.expect(r.first.non_null_rows + r.first.null_rows == 1'000'000, "compare row counts");
  check.expect(ingest_s < 60.0, "ingest " + std::to_string(ingest_s) + " s >= 60 s");
  check.expect(query_ms < 100.0, "compare " + std::to_string(query_ms) + " ms >= 100 ms");
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.0f MB ingest %.2f s, compare %.2f ms", mb, ingest_s, query_ms);
  return {check.ok(), buf + check.detail()};
}

Outcome large_upload() {
  Check check;
  LiveServer live;
  testing::SplitMix64 rng(11);
  std::string text = testing::make_numeric_csv(rng, 200000, 5, 0.05);
  const double mb = static_cast<double>(text.size()) / (1 << 20);
  check.expect(text.size() > (1u << 20), "fixture not larger than 1 MB");
  auto r = live.client->Post("/api/v1/datasets/1999_00", text, "text/csv");
  check.expect(r && r->status == 200, "upload rejected");
  if (r && r->status == 200) {
    check.expect(json::parse(r->body)["row_count"] == 200000, "row count");
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.1f MB upload accepted", mb);
  return {check.ok(), buf + check.detail()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"schema inference", schema_inference},
      {"end-to-end eight-year compare and trend", end_to_end},
      {"missing year returns 400 MISSING_PARAMETER", validation_contract},
      {"snapshot round-trip and corruption", snapshot_round_trip},
      {"1M-row ingest and compare latency", scale_anchor},
      {"uploads over 1 MB", large_upload},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << ": " << o.summary << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
