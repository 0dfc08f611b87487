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
#include "webprover/daemon.h"

#include <openssl/rand.h>

#include <charconv>
#include <optional>
#include <vector>

#include "webprover/lib_uri.h"
#include "webprover/render.h"
#include "webprover/text.h"
#include "webprover/xml_writer.h"

namespace webprover {
namespace {

Response Xml(std::vector<XmlElement> items, int status = 200) {
  return Response{status, XmlResponse(items)};
}

Response Error(std::string_view code, int status) {
  return Xml({XmlElement("error").Attr("code", std::string(code))}, status);
}

Response AuthError() { return Error("auth", 401); }

std::optional<std::string> Param(const Request& req, const std::string& key) {
  auto it = req.params.find(key);
  if (it == req.params.end()) return std::nullopt;
  return it->second;
}

std::string RandomToken() {
  unsigned char bytes[16];
  if (RAND_bytes(bytes, sizeof bytes) != 1) {
    throw std::runtime_error("no randomness");
  }
  return ToHex(bytes, sizeof bytes);
}

std::optional<long> PositiveNumber(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    return std::nullopt;
  }
  return v;
}

XmlElement GoalsXml(const std::vector<Goal>& goals) {
  XmlElement out("goals");
  out.Attr("count", static_cast<long long>(goals.size()));
  for (std::size_t i = 0; i < goals.size(); ++i) {
    XmlElement g("goal");
    g.Attr("index", static_cast<long long>(i));
    for (const auto& [name, f] : goals[i].hyps) {
      g.Child(XmlElement("hyp").Attr("name", name).Text(RenderFormula(f)));
    }
    g.Child(XmlElement("concl").Text(RenderFormula(goals[i].concl)));
    out.Child(std::move(g));
  }
  return out;
}

XmlElement PathList(const std::string& name,
                    const std::vector<std::string>& paths) {
  XmlElement out(name);
  for (const std::string& p : paths) out.Child(XmlElement("path").Text(p));
  return out;
}

// Runs fn and maps store errors to protocol errors.
template <typename Fn>
Response GuardStore(Fn&& fn) {
  try {
    return fn();
  } catch (const AccessError&) {
    return Error("access", 403);
  } catch (const NotFoundError&) {
    return Error("notfound", 404);
  } catch (const ValidationError&) {
    return Error("invalid", 400);
  } catch (const TakenError&) {
    return Error("taken", 409);
  }
}

}  // namespace

LibrarySnapshot BuildLibrary(const SharedSnapshot& shared) {
  LibrarySnapshot lib;
  lib.head = shared.head;
  for (const auto& [path, file] : shared.files) {
    const std::string module = path.substr(0, path.size() - 3);
    ProverStatus status = InitialStatus(kSharedOwner, module, std::move(lib.env),
                                        std::move(lib.notation));
    try {
      LoadScript(status, DecodeUtf8(file.content));
    } catch (const Utf8Error&) {
      // Not loadable; the module stays empty.
    }
    lib.env = std::move(status.env);
    lib.notation = std::move(status.notation);
  }
  return lib;
}

Daemon::Daemon(LibStore& store, DaemonOptions options)
    : store_(store), options_(std::move(options)) {}

std::size_t Daemon::TokenCount() const {
  std::lock_guard lock(mu_);
  return tokens_.size();
}

Response Daemon::Handle(const Request& req) {
  using Handler = Response (Daemon::*)(const Request&);
  struct Route {
    const char* method;
    const char* path;
    Handler handler;
  };
  static const Route kRoutes[] = {
      {"POST", "/matita/register", &Daemon::Register},
      {"POST", "/matita/login", &Daemon::Login},
      {"POST", "/matita/logout", &Daemon::Logout},
      {"POST", "/matita/session/new", &Daemon::NewSession},
      {"POST", "/matita/execute", &Daemon::Execute},
      {"POST", "/matita/undo", &Daemon::Undo},
      {"GET", "/matita/goals", &Daemon::Goals},
      {"GET", "/matita/ls", &Daemon::Ls},
      {"GET", "/matita/read", &Daemon::Read},
      {"POST", "/matita/save", &Daemon::Save},
      {"POST", "/matita/commit", &Daemon::Commit},
      {"POST", "/matita/update", &Daemon::Update},
  };
  for (const Route& r : kRoutes) {
    if (req.path != r.path) continue;
    if (req.method != r.method) return Error("method", 405);
    return (this->*r.handler)(req);
  }
  return Error("notfound", 404);
}

std::string Daemon::Authenticate(const Request& req) {
  const std::optional<std::string> token = Param(req, "token");
  if (!token) return "";
  std::lock_guard lock(mu_);
  auto it = tokens_.find(*token);
  if (it == tokens_.end()) return "";
  const auto now = options_.now();
  if (now - it->second.last_used > options_.idle_expiry) {
    tokens_.erase(it);
    return "";
  }
  it->second.last_used = now;
  return it->second.user;
}

std::shared_ptr<Session> Daemon::FindSession(const Request& req) {
  const std::optional<std::string> token = Param(req, "token");
  const std::optional<std::string> id = Param(req, "session");
  if (!token || !id) return nullptr;
  std::lock_guard lock(mu_);
  auto it = tokens_.find(*token);
  if (it == tokens_.end()) return nullptr;
  auto s = it->second.sessions.find(*id);
  return s == it->second.sessions.end() ? nullptr : s->second;
}

std::shared_ptr<const LibrarySnapshot> Daemon::Library() {
  const long head = store_.Head();
  {
    std::lock_guard lock(library_mu_);
    if (library_ && library_->head == head) return library_;
  }
  auto built =
      std::make_shared<const LibrarySnapshot>(BuildLibrary(store_.Shared()));
  std::lock_guard lock(library_mu_);
  if (!library_ || library_->head < built->head) library_ = built;
  return built;
}

Response Daemon::Register(const Request& req) {
  const auto user = Param(req, "user");
  const auto password = Param(req, "password");
  if (!user || !password) return Error("invalid", 400);
  return GuardStore([&] {
    store_.Register(*user, *password);
    return Xml({XmlElement("ok")});
  });
}

Response Daemon::Login(const Request& req) {
  const auto user = Param(req, "user");
  const auto password = Param(req, "password");
  if (!user || !password || !store_.Authenticate(*user, *password)) {
    return AuthError();
  }
  const std::string token = RandomToken();
  {
    std::lock_guard lock(mu_);
    tokens_[token] = TokenState{*user, options_.now(), {}, 1};
  }
  return Xml({XmlElement("token").Text(token)});
}

Response Daemon::Logout(const Request& req) {
  if (Authenticate(req).empty()) return AuthError();
  std::lock_guard lock(mu_);
  tokens_.erase(*Param(req, "token"));
  return Xml({XmlElement("ok")});
}

Response Daemon::NewSession(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  std::string module = "scratch";
  if (const auto file = Param(req, "file")) {
    std::string p;
    try {
      p = NormalizePath(*file);
    } catch (const AccessError&) {
      return Error("access", 403);
    }
    if (!p.ends_with(".ma") || !IsValidModulePath(p.substr(0, p.size() - 3))) {
      return Error("invalid", 400);
    }
    module = p.substr(0, p.size() - 3);
  }
  const auto lib = Library();
  std::lock_guard lock(mu_);
  auto it = tokens_.find(*Param(req, "token"));
  if (it == tokens_.end()) return AuthError();
  const std::string id = std::to_string(it->second.next_session++);
  it->second.sessions[id] = std::make_shared<Session>(
      id, InitialStatus(user, module, lib->env, lib->notation));
  return Xml({XmlElement("session").Attr("id", id)});
}

Response Daemon::Execute(const Request& req) {
  if (Authenticate(req).empty()) return AuthError();
  if (req.body.size() > options_.max_body) return Error("toolarge", 413);
  const auto mode_param = Param(req, "mode");
  if (!mode_param || (*mode_param != "one" && *mode_param != "all")) {
    return Error("invalid", 400);
  }
  std::shared_ptr<Session> session = FindSession(req);
  if (!session) return Error("notfound", 404);
  Text text;
  try {
    text = DecodeUtf8(req.body);
  } catch (const Utf8Error&) {
    return Error("invalid", 400);
  }

  const std::size_t before = session->depth();
  ExecResult r;
  try {
    r = session->Execute(text, *mode_param == "one" ? ExecMode::kOne
                                                    : ExecMode::kAll);
  } catch (const BusyError&) {
    return Error("busy", 409);
  }

  std::vector<XmlElement> items;
  items.push_back(XmlElement("executed")
                      .Attr("chars", static_cast<long long>(r.consumed))
                      .Attr("statements",
                            static_cast<long long>(r.statements.size())));
  for (std::size_t i = 0; i < r.statements.size(); ++i) {
    const EnrichedStatement& st = r.statements[i];
    items.push_back(XmlElement("statement")
                        .Attr("index", static_cast<long long>(before + i))
                        .Attr("chars", static_cast<long long>(st.enriched_length))
                        .Cdata(EncodeUtf8(st.text)));
  }
  items.push_back(GoalsXml(r.goals));
  if (r.error) {
    items.push_back(
        XmlElement("error")
            .Attr("code", std::string(ErrorCodeName(r.error->code)))
            .Attr("offset", static_cast<long long>(r.error->span.start))
            .Attr("length", static_cast<long long>(r.error->span.length()))
            .Text(r.error->message));
  }
  if (r.choices) {
    XmlElement c("choices");
    c.Attr("lexeme", r.choices->lexeme)
        .Attr("offset", static_cast<long long>(r.choices->span.start))
        .Attr("length", static_cast<long long>(r.choices->span.length()));
    for (const Candidate& cand : r.choices->candidates) {
      c.Child(XmlElement("candidate")
                  .Attr("uri", cand.uri ? cand.uri->str() : "")
                  .Attr("kind", std::string(CandidateKindName(cand.kind)))
                  .Child(XmlElement("display").Text(cand.display)));
    }
    items.push_back(std::move(c));
  }
  return Xml(std::move(items));
}

Response Daemon::Undo(const Request& req) {
  if (Authenticate(req).empty()) return AuthError();
  const auto steps_param = Param(req, "steps");
  std::optional<std::size_t> steps;
  if (!steps_param) return Error("invalid", 400);
  if (*steps_param != "all") {
    const auto n = PositiveNumber(*steps_param);
    if (!n) return Error("invalid", 400);
    steps = static_cast<std::size_t>(*n);
  }
  std::shared_ptr<Session> session = FindSession(req);
  if (!session) return Error("notfound", 404);
  UndoResult r;
  try {
    r = session->Undo(steps);
  } catch (const BusyError&) {
    return Error("busy", 409);
  }
  return Xml({XmlElement("undone")
                  .Attr("steps", static_cast<long long>(r.undone))
                  .Attr("remaining", static_cast<long long>(r.remaining)),
              GoalsXml(r.goals)});
}

Response Daemon::Goals(const Request& req) {
  if (Authenticate(req).empty()) return AuthError();
  std::shared_ptr<Session> session = FindSession(req);
  if (!session) return Error("notfound", 404);
  return Xml({GoalsXml(session->CurrentGoals())});
}

Response Daemon::Ls(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  const std::string path = Param(req, "path").value_or("");
  return GuardStore([&] {
    XmlElement listing("listing");
    listing.Attr("path", NormalizePath(path));
    for (const ListingEntry& e : store_.Ls(user, path)) {
      listing.Child(XmlElement("entry")
                        .Attr("name", e.name)
                        .Attr("kind", e.is_dir ? "dir" : "file")
                        .Attr("modified", e.modified ? "1" : "0"));
    }
    return Xml({std::move(listing)});
  });
}

Response Daemon::Read(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  const auto file = Param(req, "file");
  if (!file) return Error("invalid", 400);
  return GuardStore([&] {
    const std::string content = store_.Read(user, *file);
    return Xml({XmlElement("file")
                    .Attr("path", NormalizePath(*file))
                    .Cdata(content)});
  });
}

Response Daemon::Save(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  if (req.body.size() > options_.max_body) return Error("toolarge", 413);
  const auto file = Param(req, "file");
  if (!file) return Error("invalid", 400);
  return GuardStore([&] {
    store_.Save(user, *file, req.body);
    return Xml({XmlElement("ok")});
  });
}

Response Daemon::Commit(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  std::optional<std::vector<std::string>> paths;
  if (const auto p = Param(req, "paths")) {
    paths.emplace();
    std::size_t start = 0;
    while (start <= p->size()) {
      const std::size_t comma = std::min(p->find(',', start), p->size());
      if (comma > start) paths->push_back(p->substr(start, comma - start));
      start = comma + 1;
    }
  }
  return GuardStore([&] {
    const CommitResult r = store_.Commit(user, paths);
    if (r.nothing) return Xml({XmlElement("nothing")});
    if (!r.conflicts.empty()) {
      return Xml({PathList("conflicts", r.conflicts)}, 409);
    }
    return Xml({XmlElement("committed").Attr("revision", *r.revision)});
  });
}

Response Daemon::Update(const Request& req) {
  const std::string user = Authenticate(req);
  if (user.empty()) return AuthError();
  return GuardStore([&] {
    const UpdateResult r = store_.Update(user);
    return Xml({XmlElement("update")
                    .Child(PathList("updated", r.updated))
                    .Child(PathList("conflicts", r.conflicts))});
  });
}

}  // namespace webprover
