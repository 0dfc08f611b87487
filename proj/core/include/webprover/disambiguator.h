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
#ifndef WEBPROVER_DISAMBIGUATOR_H_
#define WEBPROVER_DISAMBIGUATOR_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "webprover/environment.h"
#include "webprover/lexer.h"
#include "webprover/lib_uri.h"
#include "webprover/notation.h"
#include "webprover/parser.h"
#include "webprover/proof_state.h"

namespace webprover {

enum class CandidateKind { kLemma, kAxiom, kDefinition, kHypothesis,
                           kConnective };

std::string_view CandidateKindName(CandidateKind kind);

struct Candidate {
  std::optional<LibUri> uri;  // empty only for hypotheses
  std::string display;
  CandidateKind kind;
  bool operator==(const Candidate&) const = default;
};

// Where an identifier or symbol occurs; decides its candidate set.
enum class LeafRole { kFormula, kSymbol, kApplyArg, kExactArg, kElimArg,
                      kAutoArg };

struct Leaf {
  std::size_t token;
  std::string text;
  LeafRole role;
  std::vector<Connective> connectives;  // kSymbol only
};

// Ambiguous and library-referencing leaves of a statement, in token order.
std::vector<Leaf> CollectLeaves(const StatementAst& ast);

// What the disambiguator may consult.
struct DisambiguationContext {
  const Environment& env;
  const Goal* goal = nullptr;  // first open goal, if a proof is open
};

std::vector<Candidate> CandidatesFor(const Leaf& leaf,
                                     const DisambiguationContext& ctx);

// Chosen interpretation per token index.
using Resolution = std::map<std::size_t, LibUri>;

struct ChoiceRequest {
  std::string lexeme;
  Span span;  // scalars in the submitted text
  std::vector<Candidate> candidates;
  bool operator==(const ChoiceRequest&) const = default;
};

struct DisambiguationError {
  std::string message;
  Span span;
  bool operator==(const DisambiguationError&) const = default;
};

using DisambiguationOutcome =
    std::variant<Resolution, ChoiceRequest, DisambiguationError>;

// Resolves leaves left to right: a hyperlink hint wins if it names one of
// the candidates; otherwise apply and exact arguments are filtered by
// matching the current goal; a single survivor is taken, several produce a
// ChoiceRequest for the first such leaf.
//
// Every leaf that denotes a library entry or an overloaded connective ends
// up in the Resolution, even when it had a single candidate.
DisambiguationOutcome Disambiguate(const StatementAst& ast,
                                   const LexedText& lexed,
                                   const DisambiguationContext& ctx);

// Builds the normalized formula for ast under res. Unresolved identifiers
// are atoms.
Formula Elaborate(const FormulaAst& ast, const Resolution& res,
                  const Environment& env);

Tactic ElaborateTactic(const TacticAst& ast, const Resolution& res);

}  // namespace webprover

#endif  // WEBPROVER_DISAMBIGUATOR_H_
