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
#include "webprover/auto_search.h"

#include <algorithm>
#include <string>
#include <utility>

#include "webprover/kernel.h"

namespace webprover {
namespace {

using K = Formula::Kind;

struct SearchHyp {
  std::string name;
  Formula formula;
  bool eliminated = false;
};

struct SearchGoal {
  std::vector<SearchHyp> hyps;
  Formula concl;
};

struct Found {
  ProofTerm proof;
  int height = 0;
};

struct BudgetExhausted {};

struct LibraryLemma {
  LibUri uri;
  std::vector<Formula> premises;
  Formula conclusion;
  std::set<std::string> atoms;
};

class Search {
 public:
  Search(std::vector<LibraryLemma> lemmas, std::size_t budget)
      : lemmas_(std::move(lemmas)), budget_(budget) {}

  std::size_t nodes() const { return nodes_; }

  std::optional<Found> Solve(const SearchGoal& g, int remaining) {
    if (nodes_ >= budget_) throw BudgetExhausted{};
    ++nodes_;

    for (const SearchHyp& h : g.hyps) {
      if (h.formula == g.concl) return Found{ProofTerm::Hyp(h.name), 0};
    }
    if (g.concl.is(K::kTop)) return Found{ProofTerm::TT(), 0};

    const bool can_branch = remaining >= 1;
    const int next = remaining - 1;

    if (can_branch && g.concl.is(K::kImp)) {
      const std::string x = Fresh(g);
      SearchGoal child = With(g, {{x, g.concl.left()}}, g.concl.right());
      if (auto sub = Solve(child, next)) {
        return Step(ProofTerm::Lam(x, g.concl.left(), sub->proof), *sub);
      }
    }
    if (can_branch && g.concl.is(K::kAnd)) {
      if (auto a = Solve(Retarget(g, g.concl.left()), next)) {
        if (auto b = Solve(Retarget(g, g.concl.right()), next)) {
          return Step(ProofTerm::Pair(a->proof, b->proof), *a, *b);
        }
      }
    }
    if (can_branch && g.concl.is(K::kOr)) {
      if (auto a = Solve(Retarget(g, g.concl.left()), next)) {
        return Step(ProofTerm::Inl(a->proof, g.concl.right()), *a);
      }
      if (auto b = Solve(Retarget(g, g.concl.right()), next)) {
        return Step(ProofTerm::Inr(b->proof, g.concl.left()), *b);
      }
    }

    for (std::size_t i = 0; i < g.hyps.size(); ++i) {
      if (auto found = ElimStructural(g, i, remaining)) return found;
    }
    if (can_branch) {
      for (std::size_t i = 0; i < g.hyps.size(); ++i) {
        if (auto found = ElimImplication(g, i, next)) return found;
      }
      for (const SearchHyp& h : g.hyps) {
        auto [premises, conclusion] = SplitPremises(h.formula);
        if (premises.empty() || conclusion != g.concl) continue;
        if (auto found = Chain(ProofTerm::Hyp(h.name), premises, g, next)) {
          return found;
        }
      }
    }
    for (const LibraryLemma& lemma : lemmas_) {
      auto subst = MatchConclusion(lemma.conclusion, g.concl);
      if (!subst) continue;
      for (const std::string& atom : lemma.atoms) {
        subst->emplace(atom, Formula::Atom(atom));
      }
      ProofTerm inst = ProofTerm::Inst(lemma.uri, *subst);
      if (lemma.premises.empty()) return Found{inst, 0};
      if (!can_branch) continue;
      std::vector<Formula> premises;
      for (const Formula& p : lemma.premises) {
        premises.push_back(Substitute(p, *subst));
      }
      if (auto found = Chain(inst, premises, g, next)) return found;
    }
    return std::nullopt;
  }

 private:
  static Found Step(ProofTerm proof, const Found& a) {
    return Found{std::move(proof), a.height + 1};
  }
  static Found Step(ProofTerm proof, const Found& a, const Found& b) {
    return Found{std::move(proof), std::max(a.height, b.height) + 1};
  }

  static std::string Fresh(const SearchGoal& g,
                           const std::set<std::string>& taken = {}) {
    std::set<std::string> names = taken;
    for (const SearchHyp& h : g.hyps) names.insert(h.name);
    for (int i = 1;; ++i) {
      std::string candidate = "H" + std::to_string(i);
      if (!names.contains(candidate)) return candidate;
    }
  }

  static SearchGoal Retarget(const SearchGoal& g, const Formula& concl) {
    return SearchGoal{g.hyps, concl};
  }

  static SearchGoal With(const SearchGoal& g,
                         std::vector<std::pair<std::string, Formula>> added,
                         const Formula& concl,
                         std::optional<std::size_t> eliminate = std::nullopt) {
    SearchGoal child{g.hyps, concl};
    if (eliminate) child.hyps[*eliminate].eliminated = true;
    for (auto& [name, f] : added) {
      child.hyps.push_back(SearchHyp{std::move(name), std::move(f), false});
    }
    return child;
  }

  // Proves each premise at the given depth and applies head to the proofs.
  std::optional<Found> Chain(ProofTerm head,
                             const std::vector<Formula>& premises,
                             const SearchGoal& g, int depth) {
    int height = 0;
    for (const Formula& p : premises) {
      auto sub = Solve(Retarget(g, p), depth);
      if (!sub) return std::nullopt;
      head = ProofTerm::App(std::move(head), sub->proof);
      height = std::max(height, sub->height);
    }
    return Found{std::move(head), height + 1};
  }

  std::optional<Found> ElimStructural(const SearchGoal& g, std::size_t i,
                                      int remaining) {
    const SearchHyp& h = g.hyps[i];
    if (h.eliminated) return std::nullopt;
    const Formula& f = h.formula;
    const ProofTerm self = ProofTerm::Hyp(h.name);
    if (f.is(K::kBot)) return Found{ProofTerm::ExFalso(self, g.concl), 0};
    if (remaining < 1) return std::nullopt;
    if (f.is(K::kAnd)) {
      const std::string x = Fresh(g);
      const std::string y = Fresh(g, {x});
      SearchGoal child = With(g, {{x, f.left()}, {y, f.right()}}, g.concl, i);
      if (auto sub = Solve(child, remaining - 1)) {
        ProofTerm inner = ProofTerm::App(ProofTerm::Lam(y, f.right(), sub->proof),
                                         ProofTerm::Snd(self));
        return Step(ProofTerm::App(ProofTerm::Lam(x, f.left(), inner),
                                   ProofTerm::Fst(self)),
                    *sub);
      }
    } else if (f.is(K::kOr)) {
      const std::string x = Fresh(g);
      auto a = Solve(With(g, {{x, f.left()}}, g.concl, i), remaining - 1);
      if (!a) return std::nullopt;
      auto b = Solve(With(g, {{x, f.right()}}, g.concl, i), remaining - 1);
      if (!b) return std::nullopt;
      return Step(ProofTerm::Case(self, x, a->proof, x, b->proof), *a, *b);
    }
    return std::nullopt;
  }

  // Left rules for an implication hypothesis A → B, by the shape of A.
  std::optional<Found> ElimImplication(const SearchGoal& g, std::size_t i,
                                       int next) {
    const SearchHyp& h = g.hyps[i];
    if (h.eliminated || !h.formula.is(K::kImp)) return std::nullopt;
    const Formula& a = h.formula.left();
    const Formula& b = h.formula.right();
    const ProofTerm self = ProofTerm::Hyp(h.name);

    // Use B once A is available outright.
    auto use_consequent = [&](ProofTerm evidence) -> std::optional<Found> {
      const std::string y = Fresh(g);
      auto sub = Solve(With(g, {{y, b}}, g.concl, i), next);
      if (!sub) return std::nullopt;
      return Step(ProofTerm::App(ProofTerm::Lam(y, b, sub->proof),
                                 ProofTerm::App(self, std::move(evidence))),
                  *sub);
    };

    if (a.is(K::kTop)) return use_consequent(ProofTerm::TT());
    for (const SearchHyp& other : g.hyps) {
      if (other.formula == a) {
        if (auto found = use_consequent(ProofTerm::Hyp(other.name))) {
          return found;
        }
        break;
      }
    }

    if (a.is(K::kAnd)) {
      // (C ∧ D → B) becomes C → D → B.
      const Formula& c = a.left();
      const Formula& d = a.right();
      const std::string y = Fresh(g);
      const std::string xc = Fresh(g, {y});
      const std::string xd = Fresh(g, {y, xc});
      const Formula curried = Formula::Imp(c, Formula::Imp(d, b));
      auto sub = Solve(With(g, {{y, curried}}, g.concl, i), next);
      if (!sub) return std::nullopt;
      ProofTerm witness = ProofTerm::Lam(
          xc, c,
          ProofTerm::Lam(xd, d,
                         ProofTerm::App(self, ProofTerm::Pair(ProofTerm::Hyp(xc),
                                                              ProofTerm::Hyp(xd)))));
      return Step(ProofTerm::App(ProofTerm::Lam(y, curried, sub->proof),
                                 std::move(witness)),
                  *sub);
    }
    if (a.is(K::kOr)) {
      // (C ∨ D → B) becomes C → B and D → B.
      const Formula& c = a.left();
      const Formula& d = a.right();
      const std::string y1 = Fresh(g);
      const std::string y2 = Fresh(g, {y1});
      const std::string x = Fresh(g, {y1, y2});
      const Formula from_c = Formula::Imp(c, b);
      const Formula from_d = Formula::Imp(d, b);
      auto sub = Solve(With(g, {{y1, from_c}, {y2, from_d}}, g.concl, i), next);
      if (!sub) return std::nullopt;
      ProofTerm via_c = ProofTerm::Lam(
          x, c, ProofTerm::App(self, ProofTerm::Inl(ProofTerm::Hyp(x), d)));
      ProofTerm via_d = ProofTerm::Lam(
          x, d, ProofTerm::App(self, ProofTerm::Inr(ProofTerm::Hyp(x), c)));
      ProofTerm body = ProofTerm::App(ProofTerm::Lam(y2, from_d, sub->proof),
                                      std::move(via_d));
      return Step(ProofTerm::App(ProofTerm::Lam(y1, from_c, std::move(body)),
                                 std::move(via_c)),
                  *sub);
    }
    if (a.is(K::kImp)) {
      // ((C → D) → B): prove C → D assuming D → B, then continue with B.
      const Formula& c = a.left();
      const Formula& d = a.right();
      const std::string k = Fresh(g);
      const Formula d_to_b = Formula::Imp(d, b);
      auto first = Solve(With(g, {{k, d_to_b}}, a, i), next);
      if (!first) return std::nullopt;
      const std::string y = Fresh(g);
      auto second = Solve(With(g, {{y, b}}, g.concl, i), next);
      if (!second) return std::nullopt;
      const std::string xd = Fresh(g, {k});
      const std::string xc = Fresh(g, {k, xd});
      ProofTerm k_witness = ProofTerm::Lam(
          xd, d, ProofTerm::App(self, ProofTerm::Lam(xc, c, ProofTerm::Hyp(xd))));
      ProofTerm c_to_d = ProofTerm::App(ProofTerm::Lam(k, d_to_b, first->proof),
                                        std::move(k_witness));
      return Step(ProofTerm::App(ProofTerm::Lam(y, b, second->proof),
                                 ProofTerm::App(self, std::move(c_to_d))),
                  *first, *second);
    }
    return std::nullopt;
  }

  std::vector<LibraryLemma> lemmas_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

std::vector<LibraryLemma> CollectLemmas(
    const Environment& env, const std::optional<std::vector<LibUri>>& allowed) {
  std::vector<LibUri> uris;
  if (allowed) {
    uris = *allowed;
    std::sort(uris.begin(), uris.end());
    uris.erase(std::unique(uris.begin(), uris.end()), uris.end());
  } else {
    uris = env.VisibleStatements();
  }
  std::vector<LibraryLemma> out;
  for (const LibUri& uri : uris) {
    const Entry* entry = env.Find(uri);
    if (entry == nullptr) continue;
    std::optional<Formula> statement = StatementOf(*entry);
    if (!statement) continue;
    auto [premises, conclusion] = SplitPremises(*statement);
    out.push_back(LibraryLemma{uri, std::move(premises), std::move(conclusion),
                               AtomsOf(*statement)});
  }
  return out;
}

}  // namespace

SearchResult AutoSearch(const Goal& goal, const Environment& env, int depth,
                        const std::optional<std::vector<LibUri>>& allowed,
                        std::size_t budget) {
  SearchGoal root;
  for (const auto& [name, f] : goal.hyps) {
    root.hyps.push_back(SearchHyp{name, UnfoldNormalize(f, env), false});
  }
  root.concl = UnfoldNormalize(goal.concl, env);

  Search search(CollectLemmas(env, allowed), budget);
  try {
    std::optional<Found> found = search.Solve(root, depth);
    const SearchStats stats{search.nodes(), budget};
    if (!found) return SearchFailure{stats, false};
    AutoTrace trace{found->proof.ReferencedUris(), std::max(1, found->height)};
    return SearchSuccess{std::move(found->proof), std::move(trace), stats};
  } catch (const BudgetExhausted&) {
    return SearchFailure{SearchStats{search.nodes(), budget}, true};
  }
}

SearchResult Replay(const Goal& goal, const Environment& env,
                    const AutoTrace& trace, std::size_t budget) {
  return AutoSearch(goal, env, trace.depth, trace.lemmas, budget);
}

}  // namespace webprover
