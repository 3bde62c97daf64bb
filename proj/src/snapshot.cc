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

#include "pabed/snapshot.h"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "pabed/csv_reader.h"
#include "pabed/error.h"

namespace pabed {
namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void bytes(std::string_view b) { out_.append(b); }
  void str(std::string_view s) {
    if (s.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw std::length_error("string longer than 4 GiB cannot be snapshotted");
    }
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s);
  }

  std::string& buffer() noexcept { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::size_t remaining() const noexcept { return in_.size() - pos_; }

  std::string_view take(std::size_t n) {
    if (n > remaining()) throw Error(ErrorCode::kFormat, "snapshot truncated");
    auto out = in_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint32_t u32() {
    auto b = take(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(b[i]);
    return v;
  }
  std::uint64_t u64() {
    auto b = take(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(b[i]);
    return v;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

void write_column_block(Writer& w, const ColumnData& col) {
  auto bitmap = col.nulls().bytes();
  w.bytes({reinterpret_cast<const char*>(bitmap.data()), bitmap.size()});
  switch (col.type()) {
    case ColumnType::kInt64:
      for (auto v : col.int64s()) w.u64(static_cast<std::uint64_t>(v));
      break;
    case ColumnType::kFloat64:
      for (auto v : col.float64s()) w.u64(std::bit_cast<std::uint64_t>(v));
      break;
    case ColumnType::kBool:
      for (auto v : col.bools()) w.u8(v);
      break;
    case ColumnType::kString:
      for (const auto& v : col.strings()) w.str(v);
      break;
  }
}

ColumnData read_column_block(Reader& r, const ColumnSpec& spec, std::size_t rows) {
  auto raw_bitmap = r.take((rows + 7) / 8);
  NullBitmap nulls = NullBitmap::from_bytes(
      std::vector<std::uint8_t>(raw_bitmap.begin(), raw_bitmap.end()), rows);
  auto need = [&](std::size_t width) {
    if (rows > r.remaining() / width) throw Error(ErrorCode::kFormat, "snapshot truncated");
  };
  switch (spec.type) {
    case ColumnType::kInt64: {
      need(8);
      std::vector<std::int64_t> v(rows);
      for (auto& x : v) x = static_cast<std::int64_t>(r.u64());
      return ColumnData(spec.name, spec.type, std::move(v), std::move(nulls));
    }
    case ColumnType::kFloat64: {
      need(8);
      std::vector<double> v(rows);
      for (auto& x : v) x = std::bit_cast<double>(r.u64());
      return ColumnData(spec.name, spec.type, std::move(v), std::move(nulls));
    }
    case ColumnType::kBool: {
      need(1);
      std::vector<std::uint8_t> v(rows);
      for (auto& x : v) {
        x = r.u8();
        if (x > 1) throw Error(ErrorCode::kFormat, "BOOL value outside 0/1");
      }
      return ColumnData(spec.name, spec.type, std::move(v), std::move(nulls));
    }
    case ColumnType::kString: {
      need(4);
      std::vector<std::string> v(rows);
      for (auto& x : v) x = std::string(r.take(r.u32()));
      return ColumnData(spec.name, spec.type, std::move(v), std::move(nulls));
    }
  }
  throw Error(ErrorCode::kFormat, "unknown column type");
}

}  // namespace

std::uint32_t crc32(std::string_view bytes) noexcept {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  const auto* p = reinterpret_cast<const Bytef*>(bytes.data());
  std::size_t left = bytes.size();
  while (left > 0) {
    auto chunk = static_cast<uInt>(std::min<std::size_t>(left, 1u << 30));
    crc = ::crc32(crc, p, chunk);
    p += chunk;
    left -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::string serialize_table(const Table& table) {
  Writer w;
  w.bytes(kSnapshotMagic);
  w.u32(kSnapshotVersion);
  w.u32(static_cast<std::uint32_t>(table.column_count()));
  for (const auto& spec : table.schema()) {
    w.str(spec.name);
    w.u8(static_cast<std::uint8_t>(spec.type));
  }
  w.u64(table.row_count());
  for (const auto& col : table.columns()) write_column_block(w, col);
  w.u32(crc32(w.buffer()));
  return std::move(w.buffer());
}

Table deserialize_table(std::string_view bytes, const AcademicYearId& year) {
  constexpr std::size_t kMinSize = 4 + 4 + 4 + 8 + 4;
  if (bytes.size() < kMinSize) throw Error(ErrorCode::kFormat, "snapshot truncated");
  if (bytes.substr(0, 4) != kSnapshotMagic) throw Error(ErrorCode::kFormat, "bad snapshot magic");

  std::string_view payload = bytes.substr(0, bytes.size() - 4);
  Reader trailer(bytes.substr(bytes.size() - 4));
  if (trailer.u32() != crc32(payload)) {
    throw Error(ErrorCode::kFormat, "snapshot checksum mismatch");
  }

  Reader r(payload);
  r.take(4);
  if (auto version = r.u32(); version != kSnapshotVersion) {
    throw Error(ErrorCode::kFormat, "unsupported snapshot version " + std::to_string(version));
  }
  const std::uint32_t column_count = r.u32();
  // Each schema entry needs at least 5 bytes.
  if (column_count > r.remaining() / 5) throw Error(ErrorCode::kFormat, "snapshot truncated");
  TableSchema schema;
  schema.reserve(column_count);
  for (std::uint32_t i = 0; i < column_count; ++i) {
    std::string name(r.take(r.u32()));
    auto type = type_from_tag(r.u8());
    if (!type) throw Error(ErrorCode::kFormat, "unknown type tag for column '" + name + "'");
    schema.push_back({std::move(name), *type});
  }
  const std::uint64_t rows64 = r.u64();
  if (rows64 > std::numeric_limits<std::size_t>::max() / 8) {
    throw Error(ErrorCode::kFormat, "row count out of range");
  }
  const auto rows = static_cast<std::size_t>(rows64);

  std::vector<ColumnData> columns;
  columns.reserve(schema.size());
  for (const auto& spec : schema) columns.push_back(read_column_block(r, spec, rows));
  if (r.remaining() != 0) throw Error(ErrorCode::kFormat, "trailing bytes after snapshot data");

  if (columns.empty()) return Table(year, rows);
  try {
    return Table(year, std::move(columns));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
}

std::vector<std::uint32_t> column_checksums(const Table& table) {
  std::vector<std::uint32_t> out;
  for (const auto& col : table.columns()) {
    Writer w;
    write_column_block(w, col);
    out.push_back(crc32(w.buffer()));
  }
  return out;
}

void write_snapshot(const Table& table, const std::filesystem::path& path) {
  std::string bytes = serialize_table(table);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename snapshot into " + path.string());
}

Table read_snapshot(const std::filesystem::path& path) {
  auto year = AcademicYearId::try_parse(path.stem().string());
  if (!year) {
    throw Error(ErrorCode::kFormat,
                "snapshot file name '" + path.filename().string() + "' is not a year label");
  }
  return deserialize_table(read_text_file(path), *year);
}

}  // namespace pabed
