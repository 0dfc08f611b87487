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
#include "support/test_util.h"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "webprover/lexer.h"
#include "webprover/notation.h"
#include "webprover/parser.h"

namespace webprover::testing {

TempDir::TempDir() {
  std::random_device rd;
  std::mt19937_64 gen(rd());
  path_ = std::filesystem::temp_directory_path() /
          ("webprover-test-" + std::to_string(gen()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

Formula F(std::string_view text) {
  const Text t = ToText(text);
  const NotationTable table = NotationTable::Builtin();
  return FormulaFromAst(ParseFormula(Lex(t, table), table));
}

LibrarySnapshot LibraryFrom(const std::map<std::string, std::string>& files) {
  SharedSnapshot snap;
  snap.head = files.empty() ? 0 : 1;
  for (const auto& [path, content] : files) snap.files[path] = {content, 1};
  return BuildLibrary(snap);
}

ProverStatus StatusFor(const std::string& user, const LibrarySnapshot& lib) {
  return InitialStatus(user, "scratch", lib.env, lib.notation);
}

ExecResult RunAll(Session& s, std::string_view utf8) {
  return s.Execute(ToText(utf8), ExecMode::kAll);
}

std::string ReadTestFile(const std::string& relative) {
  const std::filesystem::path p =
      std::filesystem::path(WEBPROVER_TEST_DATA_DIR) / relative;
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("missing test file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Formula RandomFormula(std::mt19937_64& rng, int max_size) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  if (max_size <= 2) {
    switch (pick(0, 7)) {
      case 0: return Formula::Bot();
      case 1: return Formula::Top();
      default: return Formula::Atom(std::string(1, "pqr"[pick(0, 2)]));
    }
  }
  const int budget = pick(1, max_size);
  if (budget <= 2) return RandomFormula(rng, 1);
  const int kind = pick(0, 6);
  if (kind == 0) return Formula::Not(RandomFormula(rng, budget - 2));
  const int left = pick(1, budget - 2);
  Formula l = RandomFormula(rng, left);
  Formula r = RandomFormula(rng, budget - 1 - left);
  switch (kind % 3) {
    case 0: return Formula::And(std::move(l), std::move(r));
    case 1: return Formula::Or(std::move(l), std::move(r));
    default: return Formula::Imp(std::move(l), std::move(r));
  }
}

}  // namespace webprover::testing
