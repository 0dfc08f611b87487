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
#ifndef WEBPROVER_NOTATION_H_
#define WEBPROVER_NOTATION_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "webprover/formula.h"
#include "webprover/lib_uri.h"

namespace webprover {

enum class Fixity { kInfixl, kInfixr, kPrefix };

std::string_view FixityName(Fixity f);

struct NotationEntry {
  Connective connective;
  Fixity fixity;
  int priority;  // 1..99, higher binds tighter
  bool operator==(const NotationEntry&) const = default;
};

struct NotationDecl {
  Fixity fixity;
  std::string symbol;
  std::string connective;
  int priority;
  bool operator==(const NotationDecl&) const = default;
};

class NotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symbols that the lexer always recognizes and notations may not claim.
inline constexpr std::string_view kStructuralSymbols[] = {"(", ")", ":=", ":",
                                                          ","};

// Maps symbol text to its interpretations. A symbol with two or more entries
// is overloaded and is resolved later by the disambiguator.
//
// The table is a value: Register returns an updated copy.
class NotationTable {
 public:
  // Preloaded with → -> (imp, infixr 10), ∨ \/ (or, infixr 20),
  // ∧ /\ (and, infixr 30), ¬ ~ (not, prefix 40) and the constants ⊥ ⊤.
  static NotationTable Builtin();

  // Throws NotationError for reserved symbols, bad priorities, unknown
  // connectives and conflicting redeclarations.
  NotationTable Register(const NotationDecl& decl) const;

  const std::vector<NotationEntry>* Find(std::string_view symbol) const;
  bool IsOverloaded(std::string_view symbol) const;
  std::optional<Formula> Constant(std::string_view symbol) const;

  // Every symbol the lexer must munch (notations, constants and structural
  // symbols), longest first.
  const std::vector<std::string>& LexerSymbols() const { return lexer_symbols_; }

  bool operator==(const NotationTable& other) const {
    return entries_ == other.entries_;
  }

 private:
  void RebuildSymbols();

  std::map<std::string, std::vector<NotationEntry>, std::less<>> entries_;
  std::vector<std::string> lexer_symbols_;
};

}  // namespace webprover

#endif  // WEBPROVER_NOTATION_H_
