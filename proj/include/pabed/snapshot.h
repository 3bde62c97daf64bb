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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pabed/academic_year.h"
#include "pabed/table.h"

namespace pabed {

// Snapshot layout, all integers little-endian:
//
//   "PBED" | u32 version (=1)
//   u32 column count, then per column: u32 name length, UTF-8 name, u8 type tag
//   u64 row count
//   per column: null bitmap (ceil(rows/8) bytes), then values
//     INT64 / FLOAT64: 8 bytes each; BOOL: 1 byte; STRING: u32 length + bytes
//   u32 CRC-32 (IEEE) of every preceding byte
//
// The year is not stored; it comes from the `<label>.pbed` file name.

inline constexpr std::string_view kSnapshotMagic = "PBED";
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::string_view kSnapshotExtension = ".pbed";

std::string serialize_table(const Table& table);

/// Throws Error(kFormat) on bad magic, unsupported version, truncation,
/// trailing bytes, malformed content or checksum mismatch.
Table deserialize_table(std::string_view bytes, const AcademicYearId& year);

/// Writes through a temporary file and a rename. Throws Error(kIo).
void write_snapshot(const Table& table, const std::filesystem::path& path);

/// Year is taken from the file stem. Throws Error(kIo) or Error(kFormat).
Table read_snapshot(const std::filesystem::path& path);

/// CRC-32 of each column's serialized bitmap+values block, in column order.
std::vector<std::uint32_t> column_checksums(const Table& table);

std::uint32_t crc32(std::string_view bytes) noexcept;

}  // namespace pabed
