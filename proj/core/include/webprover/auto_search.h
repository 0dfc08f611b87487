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
#ifndef WEBPROVER_AUTO_SEARCH_H_
#define WEBPROVER_AUTO_SEARCH_H_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "webprover/environment.h"
#include "webprover/proof_state.h"
#include "webprover/proof_term.h"

namespace webprover {

struct SearchSuccess {
  ProofTerm proof;
  AutoTrace trace;
  SearchStats stats;
};

struct SearchFailure {
  SearchStats stats;
  bool budget_exhausted = false;
};

using SearchResult = std::variant<SearchSuccess, SearchFailure>;

// Depth-bounded backward search. At every node the alternatives are tried in
// a fixed order:
//
//   assumption, ⊤-intro, intro, split, left, right,
//   elim on ⊥/∧/∨ hypotheses, elim on implication hypotheses,
//   apply a hypothesis, apply a library lemma (uri order).
//
// Steps that close a goal outright cost no depth; every other step costs one
// level. Eliminated hypotheses are marked per branch and never eliminated
// again. Each visited goal counts one node against the budget.
//
// allowed, when present, restricts library lemmas; hypotheses are always
// usable.
SearchResult AutoSearch(const Goal& goal, const Environment& env, int depth,
                        const std::optional<std::vector<LibUri>>& allowed,
                        std::size_t budget = kDefaultAutoBudget);

// AutoSearch restricted to what a previous run recorded.
SearchResult Replay(const Goal& goal, const Environment& env,
                    const AutoTrace& trace,
                    std::size_t budget = kDefaultAutoBudget);

}  // namespace webprover

#endif  // WEBPROVER_AUTO_SEARCH_H_
