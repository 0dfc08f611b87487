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
#ifndef WEBPROVER_DAEMON_H_
#define WEBPROVER_DAEMON_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "webprover/environment.h"
#include "webprover/executor.h"
#include "webprover/libstore.h"
#include "webprover/notation.h"

namespace webprover {

struct Request {
  std::string method;  // GET or POST
  std::string path;    // e.g. /matita/execute
  std::map<std::string, std::string> params;
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/xml";
};

struct DaemonOptions {
  std::chrono::minutes idle_expiry{120};
  std::size_t max_body = std::size_t{1} << 20;
  std::function<std::chrono::steady_clock::time_point()> now =
      [] { return std::chrono::steady_clock::now(); };
};

// The shared library at one revision, executed.
struct LibrarySnapshot {
  long head = 0;
  Environment env;
  NotationTable notation = NotationTable::Builtin();
};

// Executes every shared file in path order as owner "shared", each in the
// module named by its path without ".ma".
LibrarySnapshot BuildLibrary(const SharedSnapshot& shared);

// The request handler behind the HTTP server. Thread-safe.
class Daemon {
 public:
  explicit Daemon(LibStore& store, DaemonOptions options = {});

  Response Handle(const Request& req);

  // Number of live tokens; for tests.
  std::size_t TokenCount() const;

 private:
  struct TokenState {
    std::string user;
    std::chrono::steady_clock::time_point last_used;
    std::map<std::string, std::shared_ptr<Session>> sessions;
    long next_session = 1;
  };

  Response Register(const Request& req);
  Response Login(const Request& req);
  Response Logout(const Request& req);
  Response NewSession(const Request& req);
  Response Execute(const Request& req);
  Response Undo(const Request& req);
  Response Goals(const Request& req);
  Response Ls(const Request& req);
  Response Read(const Request& req);
  Response Save(const Request& req);
  Response Commit(const Request& req);
  Response Update(const Request& req);

  // User owning the request's token; empty if invalid or expired.
  std::string Authenticate(const Request& req);
  std::shared_ptr<Session> FindSession(const Request& req);
  std::shared_ptr<const LibrarySnapshot> Library();

  LibStore& store_;
  DaemonOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, TokenState> tokens_;
  std::mutex library_mu_;
  std::shared_ptr<const LibrarySnapshot> library_;
};

}  // namespace webprover

#endif  // WEBPROVER_DAEMON_H_
