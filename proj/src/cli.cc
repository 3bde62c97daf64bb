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

#include "pabed/cli.h"

#include <charconv>
#include <iomanip>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "pabed/aggregate.h"
#include "pabed/api.h"
#include "pabed/catalog.h"
#include "pabed/json_codec.h"
#include "pabed/server.h"
#include "pabed/table_builder.h"

namespace pabed::cli {
namespace {

enum class Format { kTable, kJson, kCsv };

std::string number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(v);
}

struct Options {
  std::string catalog = "catalog";
  Format format = Format::kTable;

  std::string file;
  std::string year;
  bool strict = false;
  char delimiter = ',';
  std::vector<std::string> type_hints;
  std::vector<std::string> null_tokens;

  std::string year1, year2;
  std::string from, to;
  std::string column = kDefaultMeasure;

  std::string bind = "127.0.0.1:8080";
  std::string token;
  std::uint64_t max_upload_bytes = std::uint64_t{4} << 30;
  std::string cors_origin;
  std::string static_dir;
};

CLI::Validator type_hint_validator() {
  return CLI::Validator(
      [](std::string& hint) -> std::string {
        auto eq = hint.find('=');
        if (eq == 0 || eq == std::string::npos || !type_from_name(hint.substr(eq + 1))) {
          return "expected NAME=INT64|FLOAT64|BOOL|STRING, got '" + hint + "'";
        }
        return "";
      },
      "NAME=TYPE");
}

void add_catalog(CLI::App* cmd, Options& o) {
  cmd->add_option("--catalog", o.catalog, "Catalog directory")
      ->envname("PABED_CATALOG")
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o, bool allow_csv) {
  std::map<std::string, Format> names{{"table", Format::kTable}, {"json", Format::kJson}};
  if (allow_csv) names.emplace("csv", Format::kCsv);
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void print_ingest(std::ostream& out, const IngestReport& r, Format f) {
  if (f == Format::kJson) {
    out << json::to_json(r).dump(2) << "\n";
    return;
  }
  out << "table              " << r.table_name << "\n"
      << "rows               " << r.row_count << "\n"
      << "columns            " << r.column_count << "\n"
      << "null cells         " << r.null_cells << "\n"
      << "coercion warnings  " << r.coercion_warnings << "\n"
      << "elapsed ms         " << r.elapsed_ms << "\n";
}

int cmd_ingest(const Options& o, std::ostream& out) {
  std::filesystem::path path(o.file);
  std::string label = o.year.empty() ? path.stem().string() : o.year;
  if (o.year.empty() && !AcademicYearId::try_parse(label)) {
    throw Error(ErrorCode::kMalformedYear, "--year not given and file name '" +
                                               path.filename().string() +
                                               "' is not a year label like 1996_97");
  }
  AcademicYearId year = AcademicYearId::parse(label);
  IngestOptions options;
  options.csv.delimiter = o.delimiter;
  options.csv.strict = o.strict;
  for (const auto& hint : o.type_hints) {
    auto eq = hint.find('=');
    options.type_hints[hint.substr(0, eq)] = *type_from_name(hint.substr(eq + 1));
  }
  if (!o.null_tokens.empty()) options.nulls = NullTokenSet(o.null_tokens);
  std::string text = read_text_file(path);
  BuiltTable built = ingest_csv(text, year, options);
  Catalog catalog(o.catalog);
  catalog.publish(std::make_shared<const Table>(std::move(built.table)));
  print_ingest(out, built.report, o.format);
  return 0;
}

int cmd_list(const Options& o, std::ostream& out) {
  Catalog catalog(o.catalog);
  auto datasets = json::list_datasets(catalog);
  switch (o.format) {
    case Format::kJson: out << json::to_json(datasets).dump(2) << "\n"; break;
    case Format::kCsv:
      out << "year,row_count,column_count\n";
      for (const auto& d : datasets) {
        out << d.year.label() << "," << d.row_count << "," << d.column_count << "\n";
      }
      break;
    case Format::kTable:
      for (const auto& d : datasets) {
        out << d.year.label() << "  " << std::setw(10) << d.row_count << " rows  "
            << std::setw(6) << d.column_count << " columns\n";
      }
      break;
  }
  return 0;
}

int cmd_schema(const Options& o, std::ostream& out) {
  Catalog catalog(o.catalog);
  auto table = catalog.lookup(std::string_view(o.year));
  switch (o.format) {
    case Format::kJson: out << json::schema_json(*table).dump(2) << "\n"; break;
    case Format::kCsv:
      out << "name,type,null_count\n";
      for (const auto& c : table->columns()) {
        out << c.name() << "," << type_name(c.type()) << "," << c.null_count() << "\n";
      }
      break;
    case Format::kTable:
      for (const auto& c : table->columns()) {
        out << std::left << std::setw(32) << c.name() << std::setw(9) << type_name(c.type())
            << std::right << c.null_count() << " nulls\n";
      }
      break;
  }
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Catalog catalog(o.catalog);
  ComparisonResult r = compare_years(catalog, AcademicYearId::parse(o.year1),
                                     AcademicYearId::parse(o.year2), MeasureRef{o.column});
  switch (o.format) {
    case Format::kJson: out << json::to_json(r).dump(2) << "\n"; break;
    case Format::kCsv:
      out << "year,column,total,non_null_rows,null_rows\n";
      for (const auto* a : {&r.first, &r.second}) {
        out << a->year.label() << "," << a->measure.column_name << "," << number(a->total) << ","
            << a->non_null_rows << "," << a->null_rows << "\n";
      }
      break;
    case Format::kTable:
      for (const auto* a : {&r.first, &r.second}) {
        out << a->year.label() << "  " << a->measure.column_name << "  total "
            << number(a->total) << "  (" << a->non_null_rows << " rows, " << a->null_rows
            << " null)\n";
      }
      out << "delta       " << number(r.delta) << "\n"
          << "pct_change  " << (r.pct_change ? number(*r.pct_change) : "undefined") << "\n";
      break;
  }
  return 0;
}

int cmd_trend(const Options& o, std::ostream& out) {
  Catalog catalog(o.catalog);
  TrendSeries s = trend_series(catalog, AcademicYearId::parse(o.from),
                               AcademicYearId::parse(o.to), MeasureRef{o.column});
  switch (o.format) {
    case Format::kJson: out << json::to_json(s).dump(2) << "\n"; break;
    case Format::kCsv:
      out << "year,total,non_null_rows\n";
      for (const auto& p : s.points) {
        out << p.year.label() << "," << number(p.total) << "," << p.non_null_rows << "\n";
      }
      break;
    case Format::kTable:
      for (const auto& p : s.points) {
        out << p.year.label() << "  " << number(p.total) << "  (" << p.non_null_rows
            << " rows)\n";
      }
      break;
  }
  return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
  ServerConfig config;
  parse_bind_address(o.bind, config);
  config.catalog_root = o.catalog;
  if (!o.token.empty()) config.auth_token = o.token;
  config.max_upload_bytes = o.max_upload_bytes;
  if (!o.cors_origin.empty()) config.cors_origin = o.cors_origin;
  if (!o.static_dir.empty()) config.static_dir = o.static_dir;
  Catalog catalog(config.catalog_root);
  Server server(config, catalog);
  int port = server.bind();
  out << "pabed serving " << config.catalog_root.string() << " on http://" << config.host << ":"
      << port << std::endl;
  server.listen();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Year-keyed education data warehouse: ingest CSV tables and compare totals",
               "pabed"};
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Ingest a CSV file as one academic year's table");
  ingest->add_option("file", o.file, "CSV file")->required()->check(CLI::ExistingFile);
  ingest->add_option("--year", o.year, "Academic year label, e.g. 1996_97 (default: file stem)");
  ingest->add_flag("--strict", o.strict, "Fail on ragged rows and unparsable cells");
  ingest->add_option("--delimiter", o.delimiter, "Field delimiter")->capture_default_str();
  ingest->add_option("--type", o.type_hints, "Force a column type: NAME=INT64|FLOAT64|BOOL|STRING")
      ->check(type_hint_validator());
  ingest->add_option("--null-token", o.null_tokens,
                     "Null spelling (repeatable; replaces the defaults, empty stays null)");
  add_catalog(ingest, o);
  add_format(ingest, o, false);

  auto* list = app.add_subcommand("list", "List ingested years");
  add_catalog(list, o);
  add_format(list, o, true);

  auto* schema = app.add_subcommand("schema", "Show the inferred schema of one year");
  schema->add_option("--year", o.year, "Academic year label")->required();
  add_catalog(schema, o);
  add_format(schema, o, true);

  auto* compare = app.add_subcommand("compare", "Compare a column total between two years");
  compare->add_option("--year1", o.year1, "First academic year")->required();
  compare->add_option("--year2", o.year2, "Second academic year")->required();
  compare->add_option("--column", o.column, "Numeric column")->capture_default_str();
  add_catalog(compare, o);
  add_format(compare, o, true);

  auto* trend = app.add_subcommand("trend", "Per-year totals over a range of years");
  trend->add_option("--from", o.from, "First academic year")->required();
  trend->add_option("--to", o.to, "Last academic year")->required();
  trend->add_option("--column", o.column, "Numeric column")->capture_default_str();
  add_catalog(trend, o);
  add_format(trend, o, true);

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--bind", o.bind, "host:port")->capture_default_str();
  serve->add_option("--token", o.token, "Bearer token required for uploads")
      ->envname("PABED_TOKEN");
  serve->add_option("--max-upload-bytes", o.max_upload_bytes, "Upload size limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  serve->add_option("--cors-origin", o.cors_origin, "Allowed browser origin");
  serve->add_option("--static-dir", o.static_dir, "Directory served at /")
      ->check(CLI::ExistingDirectory);
  add_catalog(serve, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (app.got_subcommand(ingest)) return cmd_ingest(o, out);
    if (app.got_subcommand(list)) return cmd_list(o, out);
    if (app.got_subcommand(schema)) return cmd_schema(o, out);
    if (app.got_subcommand(compare)) return cmd_compare(o, out);
    if (app.got_subcommand(trend)) return cmd_trend(o, out);
    if (app.got_subcommand(serve)) return cmd_serve(o, out);
  } catch (const Error& e) {
    ApiError api = to_api_error(e);
    err << "error: " << api_code_name(api.code) << " (" << to_string(e.code())
        << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: INTERNAL: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace pabed::cli
