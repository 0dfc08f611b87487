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
#ifndef WEBPROVER_PARSER_H_
#define WEBPROVER_PARSER_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "webprover/formula.h"
#include "webprover/lexer.h"
#include "webprover/notation.h"

namespace webprover {

// Formula syntax before disambiguation. Leaves remember their token so that
// hyperlink hints and choice dialogs can be tied back to the source.
struct FormulaAst {
  enum class Kind {
    kIdent,       // name; may be an atom or a definition
    kConstant,    // ⊥ ⊤ False True
    kConnective,  // connective resolved at parse time
    kSymbolUse,   // overloaded symbol; candidates in table order
  };

  Kind kind = Kind::kConstant;
  std::string text;  // identifier name or symbol lexeme
  std::size_t token = 0;
  Formula constant;
  Connective connective = Connective::kAnd;
  std::vector<Connective> candidates;
  std::vector<FormulaAst> children;

  bool operator==(const FormulaAst&) const = default;
};

struct NameRef {
  std::string name;
  std::size_t token = 0;
  bool operator==(const NameRef&) const = default;
};

struct IntroAst {
  std::optional<NameRef> name;
  bool operator==(const IntroAst&) const = default;
};
struct ApplyAst {
  NameRef arg;
  bool operator==(const ApplyAst&) const = default;
};
struct ExactAst {
  NameRef arg;
  bool operator==(const ExactAst&) const = default;
};
struct ElimAst {
  NameRef arg;
  bool operator==(const ElimAst&) const = default;
};
struct AssumptionAst {
  bool operator==(const AssumptionAst&) const = default;
};
struct SplitAst {
  bool operator==(const SplitAst&) const = default;
};
struct LeftAst {
  bool operator==(const LeftAst&) const = default;
};
struct RightAst {
  bool operator==(const RightAst&) const = default;
};

struct AutoArgs {
  std::optional<std::vector<NameRef>> lemmas;
  std::optional<int> depth;
  bool operator==(const AutoArgs&) const = default;
};

// auto [<T> using ... depth k</T>] [using ...] [depth n]
struct AutoAst {
  std::size_t auto_token = 0;
  AutoArgs user;
  std::optional<AutoArgs> trace;  // arguments written inside <T>...</T>
  bool operator==(const AutoAst&) const = default;
};

using TacticAst = std::variant<IntroAst, ApplyAst, ExactAst, ElimAst,
                               AssumptionAst, SplitAst, LeftAst, RightAst,
                               AutoAst>;

struct AxiomDecl {
  NameRef name;
  FormulaAst formula;
  bool operator==(const AxiomDecl&) const = default;
};
struct DefinitionDecl {
  NameRef name;
  FormulaAst formula;
  bool operator==(const DefinitionDecl&) const = default;
};
struct TheoremDecl {
  NameRef name;
  FormulaAst formula;
  bool operator==(const TheoremDecl&) const = default;
};
struct NotationStmt {
  NotationDecl decl;
  bool operator==(const NotationStmt&) const = default;
};
struct TacticStmt {
  TacticAst tactic;
  bool operator==(const TacticStmt&) const = default;
};
struct QedStmt {
  bool operator==(const QedStmt&) const = default;
};

using StatementBody = std::variant<AxiomDecl, DefinitionDecl, TheoremDecl,
                                   NotationStmt, TacticStmt, QedStmt>;

struct StatementAst {
  StatementBody body;
  // Source slice from the previous consumption point through the dot,
  // markup and leading comments included.
  Text raw;
  Span consumed;
  // From the statement head through the dot.
  Span core;
  std::size_t first_token = 0;  // head keyword
  std::size_t dot_token = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, Span span)
      : std::runtime_error(message), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

// Parses one statement starting at stream index from, which must be 0 or
// one past a previous dot. Returns the statement and the index after its
// dot. Throws ParseError; nothing is consumed on error.
std::pair<StatementAst, std::size_t> ParseStatement(const LexedText& lexed,
                                                    const NotationTable& table,
                                                    std::size_t from);

// Parses a standalone formula; used for tests and the CLI.
FormulaAst ParseFormula(const LexedText& lexed, const NotationTable& table);

// Interprets a formula AST with no overloads and no definitions: identifiers
// become atoms. Throws ParseError if a SymbolUse remains.
Formula FormulaFromAst(const FormulaAst& ast);

}  // namespace webprover

#endif  // WEBPROVER_PARSER_H_
