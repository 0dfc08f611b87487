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
#ifndef WEBPROVER_TESTS_SUPPORT_TEST_UTIL_H_
#define WEBPROVER_TESTS_SUPPORT_TEST_UTIL_H_

#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "webprover/daemon.h"
#include "webprover/executor.h"
#include "webprover/formula.h"
#include "webprover/text.h"

namespace webprover {

// Readable gtest output.
inline void PrintTo(const LibUri& uri, std::ostream* os) { *os << uri.str(); }

}  // namespace webprover

namespace webprover::testing {

// A directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Parses with the builtin notation; identifiers become atoms.
Formula F(std::string_view text);

// Library built from in-memory files, as the daemon would build it.
LibrarySnapshot LibraryFrom(const std::map<std::string, std::string>& files);

// Fresh scratch status for user on top of lib.
ProverStatus StatusFor(const std::string& user, const LibrarySnapshot& lib);

// Runs text in mode=all on a fresh session; for quick checks.
ExecResult RunAll(Session& s, std::string_view utf8);

std::string ReadTestFile(const std::string& relative);

// Random Ref-free formula over atoms p, q, r with Size() <= max_size.
Formula RandomFormula(std::mt19937_64& rng, int max_size);

}  // namespace webprover::testing

#endif  // WEBPROVER_TESTS_SUPPORT_TEST_UTIL_H_
