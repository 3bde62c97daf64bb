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
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "pabed/catalog.h"

namespace pabed {

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path catalog_root = "catalog";
  // When set, POST endpoints require `Authorization: Bearer <token>`.
  std::optional<std::string> auth_token;
  std::uint64_t max_upload_bytes = std::uint64_t{4} << 30;
  // Adds Access-Control-Allow-Origin for this origin and answers preflights.
  std::optional<std::string> cors_origin;
  // Static files (the dashboard) served under "/".
  std::optional<std::filesystem::path> static_dir;
};

/// "host:port" or ":port". Throws std::invalid_argument.
void parse_bind_address(std::string_view address, ServerConfig& config);

/// HTTP/1.1 front end over ApiHandler:
///   GET  /api/v1/datasets
///   POST /api/v1/datasets/{year}      (body: CSV, optional ?strict=true)
///   GET  /api/v1/compare?year1=&year2=&column=
///   GET  /api/v1/trend?from=&to=&column=
///   GET  /api/v1/schema/{year}
class Server {
 public:
  /// Throws std::invalid_argument when max_upload_bytes is 0.
  Server(ServerConfig config, Catalog& catalog);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket; returns the bound port. Throws std::runtime_error.
  int bind();
  /// Serves until stop(). Call after bind().
  void listen();
  /// bind() then listen() on a background thread; returns the bound port.
  int start();
  void stop();

  int port() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pabed
