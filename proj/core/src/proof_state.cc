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
#include "webprover/proof_state.h"

#include <algorithm>

#include "webprover/auto_search.h"
#include "webprover/render.h"

namespace webprover {
namespace {

using K = Formula::Kind;

class TacticRunner {
 public:
  TacticRunner(const ProofState& ps, const Environment& env)
      : state_(ps), env_(env), goal_(ps.goals.front()) {}

  TacticOutcome Run(const Tactic& t) {
    std::visit([this](const auto& tac) { Do(tac); }, t);
    if (state_.goals.empty()) {
      CheckResult result = Check(state_.proof, state_.statement, env_);
      if (!result) throw ProofRejected(result.reason);
    }
    return TacticOutcome{std::move(state_), std::move(trace_), stats_};
  }

 private:
  // Replaces the first goal by subgoals and fills its hole with term, whose
  // holes must be the subgoals' holes.
  void Refine(const ProofTerm& term, std::vector<Goal> subgoals) {
    state_.proof = state_.proof.FillHole(goal_.hole, term);
    state_.goals.erase(state_.goals.begin());
    state_.goals.insert(state_.goals.begin(), subgoals.begin(), subgoals.end());
  }

  int NewHole() { return state_.next_hole++; }

  Goal Subgoal(Hypotheses hyps, Formula concl, int* hole) {
    *hole = NewHole();
    return Goal{std::move(hyps), std::move(concl), *hole};
  }

  // The formula an argument proves, and the term that denotes it. Library
  // statements are used as given, with every atom mapped to itself.
  std::pair<Formula, ProofTerm> Resolve(const TacticArg& arg) const {
    if (!arg.is_library()) {
      const Formula* f = goal_.FindHyp(arg.hypothesis);
      if (f == nullptr) throw TacticError("no hypothesis " + arg.hypothesis);
      return {*f, ProofTerm::Hyp(arg.hypothesis)};
    }
    const Formula statement = Statement(*arg.uri);
    Substitution identity;
    for (const std::string& atom : AtomsOf(statement)) {
      identity.emplace(atom, Formula::Atom(atom));
    }
    return {statement, ProofTerm::Inst(*arg.uri, std::move(identity))};
  }

  Formula Statement(const LibUri& uri) const {
    const Entry* entry = env_.Find(uri);
    if (entry == nullptr) throw TacticError("unknown library entry " + uri.str());
    std::optional<Formula> statement = StatementOf(*entry);
    if (!statement) throw TacticError(uri.name() + " is a definition");
    return *statement;
  }

  static Substitution Complete(Substitution subst, const Formula& statement) {
    for (const std::string& atom : AtomsOf(statement)) {
      subst.emplace(atom, Formula::Atom(atom));
    }
    return subst;
  }

  void Do(const tactic::Intro& t) {
    if (!goal_.concl.is(K::kImp)) {
      throw TacticError("intro expects an implication or negation goal");
    }
    std::string name = t.name ? *t.name : FreshName(goal_.hyps);
    if (goal_.FindHyp(name) != nullptr) {
      throw TacticError("hypothesis " + name + " already exists");
    }
    Hypotheses hyps = goal_.hyps;
    hyps.emplace_back(name, goal_.concl.left());
    int hole;
    Goal sub = Subgoal(std::move(hyps), goal_.concl.right(), &hole);
    Refine(ProofTerm::Lam(name, goal_.concl.left(), ProofTerm::Hole(hole)),
           {std::move(sub)});
  }

  void ApplyWith(ProofTerm head, const std::vector<Formula>& premises) {
    std::vector<Goal> subgoals;
    for (const Formula& p : premises) {
      int hole;
      subgoals.push_back(Subgoal(goal_.hyps, p, &hole));
      head = ProofTerm::App(std::move(head), ProofTerm::Hole(hole));
    }
    Refine(head, std::move(subgoals));
  }

  void Do(const tactic::Apply& t) {
    if (!t.arg.is_library()) {
      const Formula* f = goal_.FindHyp(t.arg.hypothesis);
      if (f == nullptr) throw TacticError("no hypothesis " + t.arg.hypothesis);
      auto [premises, conclusion] = SplitPremises(*f);
      if (conclusion != goal_.concl) {
        throw TacticError(t.arg.hypothesis + " does not apply");
      }
      ApplyWith(ProofTerm::Hyp(t.arg.hypothesis), premises);
      return;
    }
    const Formula statement = Statement(*t.arg.uri);
    auto [premises, conclusion] = SplitPremises(statement);
    auto subst = MatchConclusion(conclusion, goal_.concl);
    if (!subst) throw TacticError(t.arg.uri->name() + " does not apply");
    Substitution full = Complete(std::move(*subst), statement);
    std::vector<Formula> instantiated;
    for (const Formula& p : premises) {
      instantiated.push_back(Substitute(p, full));
    }
    ApplyWith(ProofTerm::Inst(*t.arg.uri, std::move(full)), instantiated);
  }

  void Do(const tactic::Exact& t) {
    if (!t.arg.is_library()) {
      auto [f, term] = Resolve(t.arg);
      if (f != goal_.concl) {
        throw TacticError(t.arg.hypothesis + " does not match the goal");
      }
      Refine(term, {});
      return;
    }
    const Formula statement = Statement(*t.arg.uri);
    auto subst = MatchConclusion(statement, goal_.concl);
    if (!subst) throw TacticError(t.arg.uri->name() + " does not match the goal");
    Refine(ProofTerm::Inst(*t.arg.uri, Complete(std::move(*subst), statement)),
           {});
  }

  void Do(const tactic::Assumption&) {
    for (const auto& [name, f] : goal_.hyps) {
      if (f == goal_.concl) {
        Refine(ProofTerm::Hyp(name), {});
        return;
      }
    }
    throw TacticError("no hypothesis matches the goal");
  }

  void Do(const tactic::Split&) {
    if (!goal_.concl.is(K::kAnd)) {
      throw TacticError("split expects a conjunction goal");
    }
    int left_hole;
    int right_hole;
    Goal left = Subgoal(goal_.hyps, goal_.concl.left(), &left_hole);
    Goal right = Subgoal(goal_.hyps, goal_.concl.right(), &right_hole);
    Refine(ProofTerm::Pair(ProofTerm::Hole(left_hole),
                           ProofTerm::Hole(right_hole)),
           {std::move(left), std::move(right)});
  }

  void Do(const tactic::Left&) {
    if (!goal_.concl.is(K::kOr)) throw TacticError("left expects a disjunction goal");
    int hole;
    Goal sub = Subgoal(goal_.hyps, goal_.concl.left(), &hole);
    Refine(ProofTerm::Inl(ProofTerm::Hole(hole), goal_.concl.right()),
           {std::move(sub)});
  }

  void Do(const tactic::Right&) {
    if (!goal_.concl.is(K::kOr)) {
      throw TacticError("right expects a disjunction goal");
    }
    int hole;
    Goal sub = Subgoal(goal_.hyps, goal_.concl.right(), &hole);
    Refine(ProofTerm::Inr(ProofTerm::Hole(hole), goal_.concl.left()),
           {std::move(sub)});
  }

  void Do(const tactic::Elim& t) {
    auto [f, term] = Resolve(t.arg);
    if (f.is(K::kBot)) {
      Refine(ProofTerm::ExFalso(term, goal_.concl), {});
    } else if (f.is(K::kAnd)) {
      const std::string x = FreshName(goal_.hyps);
      const std::string y = FreshName(goal_.hyps, {x});
      Hypotheses hyps = goal_.hyps;
      hyps.emplace_back(x, f.left());
      hyps.emplace_back(y, f.right());
      int hole;
      Goal sub = Subgoal(std::move(hyps), goal_.concl, &hole);
      ProofTerm inner = ProofTerm::App(
          ProofTerm::Lam(y, f.right(), ProofTerm::Hole(hole)), ProofTerm::Snd(term));
      Refine(ProofTerm::App(ProofTerm::Lam(x, f.left(), inner), ProofTerm::Fst(term)),
             {std::move(sub)});
    } else if (f.is(K::kOr)) {
      const std::string x = FreshName(goal_.hyps);
      Hypotheses left_hyps = goal_.hyps;
      left_hyps.emplace_back(x, f.left());
      Hypotheses right_hyps = goal_.hyps;
      right_hyps.emplace_back(x, f.right());
      int left_hole;
      int right_hole;
      Goal left = Subgoal(std::move(left_hyps), goal_.concl, &left_hole);
      Goal right = Subgoal(std::move(right_hyps), goal_.concl, &right_hole);
      Refine(ProofTerm::Case(term, x, ProofTerm::Hole(left_hole), x,
                             ProofTerm::Hole(right_hole)),
             {std::move(left), std::move(right)});
    } else if (f.is(K::kImp)) {
      // Forward modus ponens: prove the premise, then continue with the
      // consequent as a new hypothesis.
      const std::string y = FreshName(goal_.hyps);
      int premise_hole;
      int rest_hole;
      Goal premise = Subgoal(goal_.hyps, f.left(), &premise_hole);
      Hypotheses hyps = goal_.hyps;
      hyps.emplace_back(y, f.right());
      Goal rest = Subgoal(std::move(hyps), goal_.concl, &rest_hole);
      Refine(ProofTerm::App(ProofTerm::Lam(y, f.right(), ProofTerm::Hole(rest_hole)),
                            ProofTerm::App(term, ProofTerm::Hole(premise_hole))),
             {std::move(premise), std::move(rest)});
    } else {
      throw TacticError(
          "elim expects a conjunction, disjunction, implication or ⊥, not " +
          RenderFormula(f));
    }
  }

  void Do(const tactic::Auto& t) {
    SearchResult result =
        t.traced ? Replay(goal_, env_, AutoTrace{t.lemmas.value_or(
                                                     std::vector<LibUri>{}),
                                                 t.depth},
                          t.budget)
                 : AutoSearch(goal_, env_, t.depth, t.lemmas, t.budget);
    if (auto* failure = std::get_if<SearchFailure>(&result)) {
      throw TacticError(
          std::string("auto failed") +
          (failure->budget_exhausted ? " (search budget exhausted after "
                                     : " (") +
          std::to_string(failure->stats.nodes) + " nodes)");
    }
    auto& success = std::get<SearchSuccess>(result);
    trace_ = success.trace;
    stats_ = success.stats;
    Refine(success.proof, {});
  }

  ProofState state_;
  const Environment& env_;
  const Goal goal_;
  std::optional<AutoTrace> trace_;
  std::optional<SearchStats> stats_;
};

}  // namespace

const Formula* Goal::FindHyp(std::string_view name) const {
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

std::string FreshName(const Hypotheses& hyps,
                      const std::set<std::string>& taken) {
  for (int i = 1;; ++i) {
    std::string candidate = "H" + std::to_string(i);
    const bool used =
        taken.contains(candidate) ||
        std::any_of(hyps.begin(), hyps.end(),
                    [&](const auto& h) { return h.first == candidate; });
    if (!used) return candidate;
  }
}

ProofState StartProof(std::string theorem, const Formula& statement) {
  ProofState ps;
  ps.theorem = std::move(theorem);
  ps.statement = statement;
  ps.goals.push_back(Goal{{}, statement, 0});
  ps.proof = ProofTerm::Hole(0);
  ps.next_hole = 1;
  return ps;
}

TacticOutcome ApplyTactic(const ProofState& ps, const Tactic& t,
                          const Environment& env) {
  if (ps.goals.empty()) throw TacticError("no goals left; use qed");
  return TacticRunner(ps, env).Run(t);
}

}  // namespace webprover
