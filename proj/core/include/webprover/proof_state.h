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
#ifndef WEBPROVER_PROOF_STATE_H_
#define WEBPROVER_PROOF_STATE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "webprover/environment.h"
#include "webprover/formula.h"
#include "webprover/kernel.h"
#include "webprover/lib_uri.h"
#include "webprover/proof_term.h"

namespace webprover {

struct Goal {
  Hypotheses hyps;
  Formula concl;
  int hole = 0;  // the hole of the partial proof this goal fills

  const Formula* FindHyp(std::string_view name) const;
  bool operator==(const Goal&) const = default;
};

// First of H1, H2, ... that is neither a hypothesis of goal nor in taken.
std::string FreshName(const Hypotheses& hyps,
                      const std::set<std::string>& taken = {});

struct ProofState {
  std::string theorem;
  Formula statement;
  std::vector<Goal> goals;
  ProofTerm proof;  // one hole per open goal
  int next_hole = 0;

  bool Complete() const { return goals.empty(); }
  bool operator==(const ProofState&) const = default;
};

ProofState StartProof(std::string theorem, const Formula& statement);

// A disambiguated tactic argument: a local hypothesis or a library entry.
struct TacticArg {
  std::string hypothesis;
  std::optional<LibUri> uri;

  static TacticArg Hyp(std::string name) { return {std::move(name), {}}; }
  static TacticArg Library(LibUri uri) { return {"", std::move(uri)}; }
  bool is_library() const { return uri.has_value(); }
  bool operator==(const TacticArg&) const = default;
};

inline constexpr int kDefaultAutoDepth = 3;
inline constexpr std::size_t kDefaultAutoBudget = 10000;

namespace tactic {

struct Intro {
  std::optional<std::string> name;
};
struct Apply {
  TacticArg arg;
};
struct Exact {
  TacticArg arg;
};
struct Elim {
  TacticArg arg;
};
struct Assumption {};
struct Split {};
struct Left {};
struct Right {};
struct Auto {
  // nullopt: every visible lemma; with traced, the recorded lemmas.
  std::optional<std::vector<LibUri>> lemmas;
  int depth = kDefaultAutoDepth;
  bool traced = false;
  std::size_t budget = kDefaultAutoBudget;
};

}  // namespace tactic

using Tactic = std::variant<tactic::Intro, tactic::Apply, tactic::Exact,
                            tactic::Elim, tactic::Assumption, tactic::Split,
                            tactic::Left, tactic::Right, tactic::Auto>;

class TacticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The kernel refused a finished proof.
class ProofRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AutoTrace {
  std::vector<LibUri> lemmas;  // first-use order, no duplicates
  int depth = 1;
  bool operator==(const AutoTrace&) const = default;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t budget = kDefaultAutoBudget;
};

struct TacticOutcome {
  ProofState state;
  // Set for auto.
  std::optional<AutoTrace> trace;
  std::optional<SearchStats> stats;
};

// Runs t on the first goal. Throws TacticError on shape mismatch and
// ProofRejected if the finished proof fails the kernel check.
TacticOutcome ApplyTactic(const ProofState& ps, const Tactic& t,
                          const Environment& env);

}  // namespace webprover

#endif  // WEBPROVER_PROOF_STATE_H_
