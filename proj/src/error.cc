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

#include "pabed/error.h"

namespace pabed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedYear: return "MalformedYear";
    case ErrorCode::kCsvSyntax: return "CsvSyntax";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kCoercion: return "CoercionError";
    case ErrorCode::kUnknownYear: return "UnknownYear";
    case ErrorCode::kUnknownColumn: return "UnknownColumn";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kEmptyRange: return "EmptyRange";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kFormat: return "FormatError";
  }
  return "Unknown";
}

}  // namespace pabed
