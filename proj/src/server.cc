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

#include "pabed/server.h"

#include <charconv>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "pabed/api.h"

namespace pabed {

void parse_bind_address(std::string_view address, ServerConfig& config) {
  auto colon = address.rfind(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("bind address must be host:port, got '" + std::string(address) + "'");
  }
  std::string_view host = address.substr(0, colon);
  std::string_view port = address.substr(colon + 1);
  int p = -1;
  auto [end, ec] = std::from_chars(port.data(), port.data() + port.size(), p);
  if (ec != std::errc() || end != port.data() + port.size() || p < 0 || p > 65535) {
    throw std::invalid_argument("invalid port in bind address '" + std::string(address) + "'");
  }
  config.host = host.empty() ? "0.0.0.0" : std::string(host);
  config.port = p;
}

struct Server::Impl {
  Impl(ServerConfig c, Catalog& catalog) : config(std::move(c)), api(catalog) {}

  void send(httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  }

  void send_error(httplib::Response& res, ApiCode code, std::string message) {
    send(res, {http_status(code), ApiError{code, std::move(message)}.body()});
  }

  bool authorized(const httplib::Request& req) const {
    if (!config.auth_token) return true;
    return req.get_header_value("Authorization") == "Bearer " + *config.auth_token;
  }

  void install_routes() {
    http.set_payload_max_length(static_cast<std::size_t>(config.max_upload_bytes));

    http.Get("/api/v1/datasets", [this](const httplib::Request&, httplib::Response& res) {
      send(res, api.list_datasets());
    });

    http.Post(R"(/api/v1/datasets/([^/]+))",
              [this](const httplib::Request& req, httplib::Response& res) {
                if (!authorized(req)) {
                  send_error(res, ApiCode::kUnauthorized, "missing or invalid bearer token");
                  return;
                }
                const bool strict = req.get_param_value("strict") == "true";
                send(res, api.ingest(req.matches[1].str(), req.body, strict));
              });

    http.Get("/api/v1/compare", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, api.compare(params_of(req)));
    });

    http.Get("/api/v1/trend", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, api.trend(params_of(req)));
    });

    http.Get(R"(/api/v1/schema/([^/]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, api.schema(req.matches[1].str()));
             });

    if (config.cors_origin) {
      http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
      });
      http.set_post_routing_handler([this](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", *config.cors_origin);
        res.set_header("Access-Control-Allow-Headers", "Authorization, Content-Type");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      });
    }

    if (config.static_dir) {
      if (!http.set_mount_point("/", config.static_dir->string())) {
        throw std::runtime_error("static directory not found: " + config.static_dir->string());
      }
    }

    // Errors raised by the transport itself (oversized body, unknown route)
    // still get a JSON error body.
    http.set_error_handler([this](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      if (res.status == 413) {
        send_error(res, ApiCode::kPayloadTooLarge,
                   "request body exceeds " + std::to_string(config.max_upload_bytes) + " bytes");
      } else if (res.status == 404) {
        send_error(res, ApiCode::kNotFound, "no such endpoint");
      } else {
        int status = res.status;
        send_error(res, ApiCode::kInternal, httplib::status_message(status));
        res.status = status;
      }
      return httplib::Server::HandlerResponse::Handled;
    });
  }

  static ParamLookup params_of(const httplib::Request& req) {
    return [&req](std::string_view name) -> std::optional<std::string> {
      std::string key(name);
      if (!req.has_param(key)) return std::nullopt;
      return req.get_param_value(key);
    };
  }

  ServerConfig config;
  ApiHandler api;
  httplib::Server http;
  std::thread worker;
  int bound_port = -1;
};

Server::Server(ServerConfig config, Catalog& catalog) {
  if (config.max_upload_bytes == 0) throw std::invalid_argument("max_upload_bytes must be > 0");
  impl_ = std::make_unique<Impl>(std::move(config), catalog);
  impl_->install_routes();
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& c = impl_->config;
  if (c.port == 0) {
    impl_->bound_port = impl_->http.bind_to_any_port(c.host);
  } else if (impl_->http.bind_to_port(c.host, c.port)) {
    impl_->bound_port = c.port;
  }
  if (impl_->bound_port <= 0) {
    throw std::runtime_error("cannot bind " + c.host + ":" + std::to_string(c.port));
  }
  return impl_->bound_port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

int Server::start() {
  int port = bind();
  impl_->worker = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
  return port;
}

void Server::stop() {
  if (!impl_) return;
  impl_->http.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

int Server::port() const noexcept { return impl_->bound_port; }

}  // namespace pabed
