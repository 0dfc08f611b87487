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
#include "webprover/disambiguator.h"

#include <algorithm>

#include "webprover/kernel.h"
#include "webprover/render.h"

namespace webprover {
namespace {

void FormulaLeaves(const FormulaAst& f, std::vector<Leaf>& out) {
  switch (f.kind) {
    case FormulaAst::Kind::kIdent:
      out.push_back(Leaf{f.token, f.text, LeafRole::kFormula, {}});
      break;
    case FormulaAst::Kind::kSymbolUse:
      out.push_back(Leaf{f.token, f.text, LeafRole::kSymbol, f.candidates});
      break;
    default:
      break;
  }
  for (const FormulaAst& c : f.children) FormulaLeaves(c, out);
}

void AutoLeaves(const AutoArgs& args, std::vector<Leaf>& out) {
  if (!args.lemmas) return;
  for (const NameRef& n : *args.lemmas) {
    out.push_back(Leaf{n.token, n.name, LeafRole::kAutoArg, {}});
  }
}

struct TacticLeaves {
  std::vector<Leaf>& out;
  void operator()(const ApplyAst& t) {
    out.push_back(Leaf{t.arg.token, t.arg.name, LeafRole::kApplyArg, {}});
  }
  void operator()(const ExactAst& t) {
    out.push_back(Leaf{t.arg.token, t.arg.name, LeafRole::kExactArg, {}});
  }
  void operator()(const ElimAst& t) {
    out.push_back(Leaf{t.arg.token, t.arg.name, LeafRole::kElimArg, {}});
  }
  void operator()(const AutoAst& t) {
    if (t.trace) AutoLeaves(*t.trace, out);
    AutoLeaves(t.user, out);
  }
  template <typename T>
  void operator()(const T&) {}
};

Candidate EntryCandidate(const LibUri& uri, const Entry& entry) {
  if (const auto* def = std::get_if<Definition>(&entry)) {
    return Candidate{uri, uri.name() + " := " + RenderFormula(def->body),
                     CandidateKind::kDefinition};
  }
  const Formula statement = *StatementOf(entry);
  const CandidateKind kind = std::holds_alternative<Axiom>(entry)
                                 ? CandidateKind::kAxiom
                                 : CandidateKind::kLemma;
  return Candidate{uri, uri.name() + " : " + RenderFormula(statement), kind};
}

bool IsTacticArg(LeafRole role) {
  return role == LeafRole::kApplyArg || role == LeafRole::kExactArg ||
         role == LeafRole::kElimArg;
}

// Whether a candidate survives the applicability filter for leaf.
bool Applicable(const Leaf& leaf, const Candidate& c,
                const DisambiguationContext& ctx) {
  if (ctx.goal == nullptr || !c.uri) return true;
  if (leaf.role != LeafRole::kApplyArg && leaf.role != LeafRole::kExactArg) {
    return true;
  }
  const Entry* entry = ctx.env.Find(*c.uri);
  std::optional<Formula> statement = entry ? StatementOf(*entry) : std::nullopt;
  if (!statement) return false;
  if (leaf.role == LeafRole::kExactArg) {
    return MatchConclusion(*statement, ctx.goal->concl).has_value();
  }
  return MatchConclusion(SplitPremises(*statement).second, ctx.goal->concl)
      .has_value();
}

}  // namespace

std::string_view CandidateKindName(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kLemma: return "lemma";
    case CandidateKind::kAxiom: return "axiom";
    case CandidateKind::kDefinition: return "definition";
    case CandidateKind::kHypothesis: return "hypothesis";
    case CandidateKind::kConnective: return "connective";
  }
  return "";
}

std::vector<Leaf> CollectLeaves(const StatementAst& ast) {
  std::vector<Leaf> out;
  std::visit(
      [&out](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, AxiomDecl> ||
                      std::is_same_v<T, DefinitionDecl> ||
                      std::is_same_v<T, TheoremDecl>) {
          FormulaLeaves(body.formula, out);
        } else if constexpr (std::is_same_v<T, TacticStmt>) {
          std::visit(TacticLeaves{out}, body.tactic);
        }
      },
      ast.body);
  std::sort(out.begin(), out.end(),
            [](const Leaf& a, const Leaf& b) { return a.token < b.token; });
  return out;
}

std::vector<Candidate> CandidatesFor(const Leaf& leaf,
                                     const DisambiguationContext& ctx) {
  std::vector<Candidate> out;
  if (leaf.role == LeafRole::kSymbol) {
    for (Connective c : leaf.connectives) {
      out.push_back(Candidate{LibUri::Builtin(c),
                              leaf.text + " as " + std::string(ConnectiveName(c)),
                              CandidateKind::kConnective});
    }
    return out;
  }
  if (IsTacticArg(leaf.role) && ctx.goal != nullptr) {
    if (const Formula* f = ctx.goal->FindHyp(leaf.text)) {
      out.push_back(Candidate{std::nullopt, leaf.text + " : " + RenderFormula(*f),
                              CandidateKind::kHypothesis});
      return out;
    }
  }
  const bool want_definitions = leaf.role == LeafRole::kFormula;
  for (const LibUri& uri : ctx.env.Lookup(leaf.text)) {
    const Entry& entry = *ctx.env.Find(uri);
    const bool is_definition = std::holds_alternative<Definition>(entry);
    if (is_definition == want_definitions) {
      out.push_back(EntryCandidate(uri, entry));
    }
  }
  return out;
}

DisambiguationOutcome Disambiguate(const StatementAst& ast,
                                   const LexedText& lexed,
                                   const DisambiguationContext& ctx) {
  Resolution res;
  for (const Leaf& leaf : CollectLeaves(ast)) {
    const Span span = lexed.tokens.at(leaf.token).span;
    std::vector<Candidate> cands = CandidatesFor(leaf, ctx);
    auto hint = lexed.links.find(leaf.token);

    if (leaf.role == LeafRole::kFormula && cands.empty() &&
        hint == lexed.links.end()) {
      continue;  // a plain atom
    }
    if (cands.size() == 1 && !cands.front().uri) {
      if (hint != lexed.links.end()) {
        return DisambiguationError{
            "stale hyperlink: " + leaf.text + " is a local hypothesis", span};
      }
      continue;
    }
    if (hint != lexed.links.end()) {
      const bool known = std::any_of(
          cands.begin(), cands.end(),
          [&](const Candidate& c) { return c.uri == hint->second; });
      if (!known) {
        return DisambiguationError{
            "stale hyperlink: " + hint->second.str() +
                " is not an interpretation of " + leaf.text,
            span};
      }
      res.emplace(leaf.token, hint->second);
      continue;
    }
    if (cands.empty()) {
      return DisambiguationError{"no interpretation applies to " + leaf.text,
                                 span};
    }
    if (cands.size() >= 2) {
      std::erase_if(cands, [&](const Candidate& c) {
        return !Applicable(leaf, c, ctx);
      });
    }
    if (cands.empty()) {
      return DisambiguationError{"no interpretation applies to " + leaf.text,
                                 span};
    }
    if (cands.size() >= 2) {
      return ChoiceRequest{lexed.tokens.at(leaf.token).lexeme, span,
                           std::move(cands)};
    }
    res.emplace(leaf.token, *cands.front().uri);
  }
  return res;
}

namespace {

Formula Build(const FormulaAst& ast, const Resolution& res) {
  switch (ast.kind) {
    case FormulaAst::Kind::kIdent: {
      auto it = res.find(ast.token);
      return it == res.end() ? Formula::Atom(ast.text) : Formula::Ref(it->second);
    }
    case FormulaAst::Kind::kConstant:
      return ast.constant;
    default:
      break;
  }
  Connective c = ast.connective;
  if (ast.kind == FormulaAst::Kind::kSymbolUse) {
    auto it = res.find(ast.token);
    if (it == res.end() || !it->second.connective()) {
      throw KernelError("overloaded symbol '" + ast.text + "' is unresolved");
    }
    c = *it->second.connective();
  }
  if (c == Connective::kNot) {
    if (ast.children.size() != 1) {
      throw KernelError("'" + ast.text + "' used as an infix negation");
    }
    return Formula::Not(Build(ast.children[0], res));
  }
  if (ast.children.size() != 2) {
    throw KernelError("'" + ast.text + "' used as a prefix connective");
  }
  Formula l = Build(ast.children[0], res);
  Formula r = Build(ast.children[1], res);
  switch (c) {
    case Connective::kAnd: return Formula::And(std::move(l), std::move(r));
    case Connective::kOr: return Formula::Or(std::move(l), std::move(r));
    default: return Formula::Imp(std::move(l), std::move(r));
  }
}

TacticArg Arg(const NameRef& n, const Resolution& res) {
  auto it = res.find(n.token);
  return it == res.end() ? TacticArg::Hyp(n.name) : TacticArg::Library(it->second);
}

std::optional<std::vector<LibUri>> AutoLemmas(const AutoArgs& args,
                                              const Resolution& res) {
  if (!args.lemmas) return std::nullopt;
  std::vector<LibUri> out;
  for (const NameRef& n : *args.lemmas) {
    auto it = res.find(n.token);
    if (it == res.end()) {
      throw TacticError("auto argument " + n.name + " is not a library lemma");
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

Formula Elaborate(const FormulaAst& ast, const Resolution& res,
                  const Environment& env) {
  return UnfoldNormalize(Build(ast, res), env);
}

Tactic ElaborateTactic(const TacticAst& ast, const Resolution& res) {
  struct Visitor {
    const Resolution& res;
    Tactic operator()(const IntroAst& t) {
      return tactic::Intro{t.name ? std::optional(t.name->name) : std::nullopt};
    }
    Tactic operator()(const ApplyAst& t) { return tactic::Apply{Arg(t.arg, res)}; }
    Tactic operator()(const ExactAst& t) { return tactic::Exact{Arg(t.arg, res)}; }
    Tactic operator()(const ElimAst& t) { return tactic::Elim{Arg(t.arg, res)}; }
    Tactic operator()(const AssumptionAst&) { return tactic::Assumption{}; }
    Tactic operator()(const SplitAst&) { return tactic::Split{}; }
    Tactic operator()(const LeftAst&) { return tactic::Left{}; }
    Tactic operator()(const RightAst&) { return tactic::Right{}; }
    Tactic operator()(const AutoAst& t) {
      tactic::Auto out;
      if (t.trace) {
        out.traced = true;
        out.lemmas = AutoLemmas(*t.trace, res).value_or(std::vector<LibUri>{});
        out.depth = *t.trace->depth;
      } else {
        out.lemmas = AutoLemmas(t.user, res);
        out.depth = t.user.depth.value_or(kDefaultAutoDepth);
      }
      return out;
    }
  };
  return std::visit(Visitor{res}, ast);
}

}  // namespace webprover
