// Copyright 2026 The Webprover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "webprover/http_server.h"

#include <httplib.h>

#include <stdexcept>

namespace webprover {

struct HttpServer::Impl {
  Daemon& daemon;
  HttpOptions options;
  httplib::Server server;

  Impl(Daemon& d, HttpOptions o) : daemon(d), options(std::move(o)) {
    const auto handler = [this](const httplib::Request& req,
                                httplib::Response& res) {
      Request r;
      r.method = req.method;
      r.path = req.path;
      for (const auto& [k, v] : req.params) r.params.emplace(k, v);
      r.body = req.body;
      const Response out = daemon.Handle(r);
      res.status = out.status;
      res.set_content(out.body, out.content_type + "; charset=utf-8");
    };
    server.Get(R"(/matita/.*)", handler);
    server.Post(R"(/matita/.*)", handler);
    server.set_payload_max_length(64u << 20);
    if (options.static_dir) {
      server.set_mount_point("/", options.static_dir->string());
    }
  }
};

HttpServer::HttpServer(Daemon& daemon, HttpOptions options)
    : impl_(std::make_unique<Impl>(daemon, std::move(options))) {}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind() {
  int port = impl_->options.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (!impl_->server.bind_to_port(impl_->options.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw std::runtime_error("cannot bind " + impl_->options.host + ":" +
                             std::to_string(impl_->options.port));
  }
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace webprover
