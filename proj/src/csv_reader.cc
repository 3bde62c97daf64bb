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

#include "pabed/csv_reader.h"

#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "pabed/error.h"

namespace pabed {

RawCsv::RawCsv(std::vector<std::string> header, std::vector<std::string> cells)
    : header_(std::move(header)), cells_(std::move(cells)) {
  rows_ = header_.empty() ? 0 : cells_.size() / header_.size();
}

std::vector<std::string> RawCsv::column_cells(std::size_t c) const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(cell(r, c));
  return out;
}

std::vector<std::string> deduplicate_header(std::vector<std::string> names) {
  std::unordered_set<std::string> used;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) names[i] = "column_" + std::to_string(i + 1);
    if (used.insert(names[i]).second) continue;
    for (std::size_t n = 2;; ++n) {
      std::string candidate = names[i] + "_" + std::to_string(n);
      if (used.insert(candidate).second) {
        names[i] = std::move(candidate);
        break;
      }
    }
  }
  return names;
}

namespace {

class Tokenizer {
 public:
  Tokenizer(std::string_view text, const CsvOptions& options)
      : text_(text), delim_(options.delimiter), strict_(options.strict) {}

  // Reads the next non-blank record into `fields`. Returns false at end of input.
  bool next(std::vector<std::string>& fields) {
    fields.clear();
    while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) {
      consume_newline();
    }
    if (pos_ >= text_.size()) return false;
    record_line_ = line_;
    for (;;) {
      fields.emplace_back();
      bool end_of_record = read_field(fields.back());
      if (end_of_record) return true;
    }
  }

  std::size_t record_line() const noexcept { return record_line_; }

 private:
  void consume_newline() {
    if (text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') ++pos_;
    ++pos_;
    ++line_;
  }

  // Returns true if the field ended the record.
  bool read_field(std::string& out) {
    if (pos_ < text_.size() && text_[pos_] == '"') {
      read_quoted(out);
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == delim_) {
        ++pos_;
        return false;
      }
      if (c == '\n' || c == '\r') {
        consume_newline();
        return true;
      }
      out.push_back(c);
      ++pos_;
    }
    return true;
  }

  void read_quoted(std::string& out) {
    std::size_t open_line = line_;
    ++pos_;
    for (;;) {
      std::size_t q = text_.find('"', pos_);
      if (q == std::string_view::npos) {
        throw Error(ErrorCode::kCsvSyntax,
                    "unclosed quote in field starting on line " + std::to_string(open_line));
      }
      for (std::size_t i = pos_; i < q; ++i) {
        if (text_[i] == '\n') ++line_;
      }
      out.append(text_.substr(pos_, q - pos_));
      pos_ = q + 1;
      if (pos_ < text_.size() && text_[pos_] == '"') {
        out.push_back('"');
        ++pos_;
        continue;
      }
      break;
    }
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != delim_ && c != '\n' && c != '\r' && strict_) {
        throw Error(ErrorCode::kCsvSyntax,
                    "unexpected character after closing quote on line " + std::to_string(line_));
      }
    }
  }

  std::string_view text_;
  char delim_;
  bool strict_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 1;
};

}  // namespace

RawCsv read_csv(std::string_view text, const CsvOptions& options) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.starts_with(kBom)) text.remove_prefix(kBom.size());

  Tokenizer tok(text, options);
  std::vector<std::string> fields;
  if (!tok.next(fields)) throw Error(ErrorCode::kEmptyInput, "CSV input has no header row");
  std::vector<std::string> header = deduplicate_header(std::move(fields));
  const std::size_t width = header.size();

  std::vector<std::string> cells;
  cells.reserve(width * (text.size() / (width * 4 + 1) + 1));
  fields = {};
  while (tok.next(fields)) {
    if (fields.size() < width) {
      if (options.strict) {
        throw Error(ErrorCode::kCsvSyntax, "line " + std::to_string(tok.record_line()) +
                                               ": expected " + std::to_string(width) +
                                               " fields, found " + std::to_string(fields.size()));
      }
      fields.resize(width);
    } else if (fields.size() > width) {
      bool extras_empty = true;
      for (std::size_t i = width; i < fields.size(); ++i) extras_empty &= fields[i].empty();
      if (options.strict || !extras_empty) {
        throw Error(ErrorCode::kCsvSyntax, "line " + std::to_string(tok.record_line()) +
                                               ": expected " + std::to_string(width) +
                                               " fields, found " + std::to_string(fields.size()));
      }
      fields.resize(width);
    }
    for (auto& f : fields) cells.push_back(std::move(f));
  }
  return RawCsv(std::move(header), std::move(cells));
}

RawCsv read_csv(std::istream& in, const CsvOptions& options) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_csv(std::string_view(text), options);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed for " + path.string());
  return std::move(ss).str();
}

}  // namespace pabed
