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
// webprover: run the daemon, or execute and convert scripts offline.
#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cwctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "webprover/daemon.h"
#include "webprover/enricher.h"
#include "webprover/executor.h"
#include "webprover/http_server.h"
#include "webprover/libstore.h"
#include "webprover/render.h"
#include "webprover/text.h"

namespace fs = std::filesystem;
using namespace webprover;

namespace {

std::string Slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every *.ma under dir, keyed by relative path.
std::map<std::string, std::string> MaFiles(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".ma") {
      out[fs::relative(e.path(), dir).generic_string()] = Slurp(e.path().string());
    }
  }
  return out;
}

// Each source is a directory of .ma files or a single file.
LibrarySnapshot LoadLibrary(const std::vector<std::string>& sources) {
  SharedSnapshot snap;
  for (const std::string& src : sources) {
    if (fs::is_directory(src)) {
      for (auto& [path, content] : MaFiles(src)) {
        snap.files[path] = {std::move(content), 1};
      }
    } else {
      snap.files[fs::path(src).filename().string()] = {Slurp(src), 1};
    }
  }
  snap.head = snap.files.empty() ? 0 : 1;
  return BuildLibrary(snap);
}

void PrintGoals(const std::vector<Goal>& goals) {
  std::cerr << goals.size() << " goal(s)\n";
  for (const Goal& g : goals) {
    for (const auto& [name, f] : g.hyps) {
      std::cerr << "  " << name << " : " << RenderFormula(f) << "\n";
    }
    std::cerr << "  ----\n  " << RenderFormula(g.concl) << "\n";
  }
}

// Line and column (1-based) of scalar offset at in text.
std::string Where(TextView text, std::size_t at) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < at && i < text.size(); ++i) {
    if (text[i] == U'\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

struct ScriptRun {
  bool ok = true;
  Text enriched;
};

// Executes script to the end. Ambiguities are resolved with the first
// candidate when pick_first is set, otherwise they stop the run.
ScriptRun RunScript(const std::string& path, const std::vector<std::string>& library,
                    const std::string& user, bool pick_first, bool verbose) {
  const LibrarySnapshot lib = LoadLibrary(library);
  Session session("cli", InitialStatus(user, "scratch", lib.env, lib.notation));
  Text remainder = DecodeUtf8(Slurp(path));
  Text done;  // executed prefix, as submitted
  // Positions in remainder, reported against the whole script. Inserted
  // links hold no newlines, so lines stay exact.
  const auto where = [&](std::size_t at) {
    const Text all = done + remainder;
    at += done.size();
    while (at < all.size() && std::iswspace(static_cast<wint_t>(all[at]))) ++at;
    return Where(all, at);
  };
  ScriptRun run;
  while (true) {
    const ExecResult r = session.Execute(remainder, ExecMode::kAll);
    for (std::size_t i = 0; i < r.statements.size(); ++i) {
      run.enriched += r.statements[i].text;
      if (verbose && r.search[i]) {
        std::cerr << "auto at " << where(r.statements[i].original.start)
                  << ": " << r.search[i]->nodes << " nodes\n";
      }
    }
    if (r.error) {
      std::cerr << path << ":" << where(r.error->span.start) << ": "
                << ErrorCodeName(r.error->code) << " error: " << r.error->message
                << "\n";
      PrintGoals(r.goals);
      run.ok = false;
      return run;
    }
    if (r.choices) {
      const ChoiceRequest& c = *r.choices;
      if (!pick_first || !c.candidates.front().uri) {
        std::cerr << path << ":" << where(c.span.start) << ": '" << c.lexeme
                  << "' is ambiguous:\n";
        for (const Candidate& cand : c.candidates) {
          std::cerr << "  " << cand.display
                    << (cand.uri ? "  " + cand.uri->str() : std::string()) << "\n";
        }
        run.ok = false;
        return run;
      }
      const std::size_t at = c.span.start - r.consumed;
      done += remainder.substr(0, r.consumed);
      remainder.erase(0, r.consumed);
      remainder.insert(at + c.span.length(), U"</A>");
      remainder.insert(at, DecodeUtf8("<A href=\"" + c.candidates.front().uri->str() + "\">"));
      continue;
    }
    done += remainder.substr(0, r.consumed);
    remainder.erase(0, r.consumed);
    if (r.statements.empty()) break;
  }
  if (!session.CurrentGoals().empty()) {
    std::cerr << path << ": proof not finished\n";
    PrintGoals(session.CurrentGoals());
    run.ok = false;
  }
  run.enriched += remainder;  // trailing blanks and comments
  return run;
}

std::atomic<HttpServer*> g_server{nullptr};

void OnSignal(int) {
  if (HttpServer* s = g_server.load()) s->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interactive proof assistant daemon and script tools"};
  app.require_subcommand(1);

  auto* serve = app.add_subcommand("serve", "Run the HTTP daemon");
  std::string root = "webprover-data";
  HttpOptions http;
  std::optional<std::string> static_dir;
  std::optional<std::string> seed;
  int idle_minutes = 120;
  serve->add_option("--root", root, "Library store directory")->capture_default_str();
  serve->add_option("--host", http.host, "Listen address")->capture_default_str();
  serve->add_option("--port", http.port, "Listen port, 0 for any")->capture_default_str();
  serve->add_option("--static", static_dir, "Directory served under /")
      ->check(CLI::ExistingDirectory);
  serve->add_option("--import", seed,
                    "Import the .ma files of a directory into an empty shared library")
      ->check(CLI::ExistingDirectory);
  serve->add_option("--idle-minutes", idle_minutes, "Token expiry")->capture_default_str();

  std::string script;
  std::vector<std::string> library;
  std::string user = "local";
  bool pick_first = false;
  bool verbose = false;
  std::optional<std::string> output;

  auto* run = app.add_subcommand("run", "Execute a script and report the first problem");
  auto* enrich = app.add_subcommand("enrich", "Execute a script and print it enriched");
  for (CLI::App* sub : {run, enrich}) {
    sub->add_option("script", script, "Script file, - for stdin")->required();
    sub->add_option("-L,--library", library, "Shared .ma file or directory; repeatable")
        ->check(CLI::ExistingPath);
    sub->add_option("--user", user, "Owner of new definitions")->capture_default_str();
    sub->add_flag("--first", pick_first, "Resolve ambiguities with the first candidate");
    sub->add_flag("-v,--verbose", verbose, "Report search effort of each auto");
  }
  enrich->add_option("-o,--output", output, "Write here instead of stdout");

  auto* strip = app.add_subcommand("strip", "Remove hyperlinks and traces");
  strip->add_option("script", script, "Script file, - for stdin")->required();
  strip->add_option("-o,--output", output, "Write here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  const auto emit = [&](const std::string& bytes) {
    if (output) {
      std::ofstream out(*output, std::ios::binary);
      out << bytes;
      if (!out) throw std::runtime_error("cannot write " + *output);
    } else {
      std::cout << bytes;
    }
  };

  try {
    if (*serve) {
      LibStore store{fs::path(root)};
      if (seed) {
        if (store.Head() != 0) {
          std::cerr << "--import needs an empty library; " << root << " is at revision "
                    << store.Head() << "\n";
          return 1;
        }
        store.Import(MaFiles(*seed));
      }
      DaemonOptions options;
      options.idle_expiry = std::chrono::minutes(idle_minutes);
      Daemon daemon(store, options);
      if (static_dir) http.static_dir = fs::path(*static_dir);
      HttpServer server(daemon, http);
      const int port = server.Bind();
      g_server = &server;
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      std::cerr << "listening on " << http.host << ":" << port << " (revision "
                << store.Head() << ")\n";
      server.Listen();
      g_server = nullptr;
      return 0;
    }
    if (*run || *enrich) {
      const ScriptRun r = RunScript(script, library, user, pick_first, verbose);
      if (*enrich && r.ok) emit(EncodeUtf8(r.enriched));
      if (*run && r.ok) std::cerr << script << ": ok\n";
      return r.ok ? 0 : 1;
    }
    if (*strip) {
      emit(EncodeUtf8(Strip(DecodeUtf8(Slurp(script)))));
      return 0;
    }
  } catch (const StripError& e) {
    std::cerr << script << ": " << e.what() << " at offset " << e.offset() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "webprover: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
