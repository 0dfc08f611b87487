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
#include "webprover/kernel.h"

namespace webprover {

Formula UnfoldNormalize(const Formula& f, const Environment& env) {
  if (!f.ContainsRef()) return f;
  switch (f.kind()) {
    case Formula::Kind::kRef: {
      const Entry* entry = env.Find(f.uri());
      const auto* def = entry ? std::get_if<Definition>(entry) : nullptr;
      if (def == nullptr) {
        throw KernelError("dangling reference to " + f.uri().str());
      }
      return UnfoldNormalize(def->body, env);
    }
    case Formula::Kind::kImp:
      return Formula::Imp(UnfoldNormalize(f.left(), env),
                          UnfoldNormalize(f.right(), env));
    case Formula::Kind::kAnd:
      return Formula::And(UnfoldNormalize(f.left(), env),
                          UnfoldNormalize(f.right(), env));
    case Formula::Kind::kOr:
      return Formula::Or(UnfoldNormalize(f.left(), env),
                         UnfoldNormalize(f.right(), env));
    default:
      return f;
  }
}

namespace {

class Checker {
 public:
  explicit Checker(const Environment& env) : env_(env) {}

  Formula Infer(const ProofTerm& p, Hypotheses& hyps, const std::string& path) {
    using K = ProofTerm::Kind;
    switch (p.kind()) {
      case K::kHyp: {
        for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
          if (it->first == p.name()) return it->second;
        }
        throw CheckError("unbound hypothesis " + p.name(), path);
      }
      case K::kLam: {
        Formula ann = Normalize(p.ann(), path);
        hyps.emplace_back(p.name(), ann);
        Formula body = Infer(p.child(0), hyps, Sub(path, "body"));
        hyps.pop_back();
        return Formula::Imp(std::move(ann), std::move(body));
      }
      case K::kApp: {
        Formula fun = Infer(p.child(0), hyps, Sub(path, "fun"));
        if (!fun.is(Formula::Kind::kImp)) {
          throw CheckError("application of a non-implication",
                           Sub(path, "fun"));
        }
        Formula arg = Infer(p.child(1), hyps, Sub(path, "arg"));
        if (arg != fun.left()) {
          throw CheckError("argument does not match the premise",
                           Sub(path, "arg"));
        }
        return fun.right();
      }
      case K::kPair:
        return Formula::And(Infer(p.child(0), hyps, Sub(path, "fst")),
                            Infer(p.child(1), hyps, Sub(path, "snd")));
      case K::kFst:
      case K::kSnd: {
        Formula conj = Infer(p.child(0), hyps, Sub(path, "arg"));
        if (!conj.is(Formula::Kind::kAnd)) {
          throw CheckError("projection from a non-conjunction",
                           Sub(path, "arg"));
        }
        return p.is(K::kFst) ? conj.left() : conj.right();
      }
      case K::kInl:
        return Formula::Or(Infer(p.child(0), hyps, Sub(path, "arg")),
                           Normalize(p.ann(), path));
      case K::kInr:
        return Formula::Or(Normalize(p.ann(), path),
                           Infer(p.child(0), hyps, Sub(path, "arg")));
      case K::kCase: {
        Formula disj = Infer(p.child(0), hyps, Sub(path, "scrut"));
        if (!disj.is(Formula::Kind::kOr)) {
          throw CheckError("case analysis on a non-disjunction",
                           Sub(path, "scrut"));
        }
        hyps.emplace_back(p.name(), disj.left());
        Formula left = Infer(p.child(1), hyps, Sub(path, "left"));
        hyps.pop_back();
        hyps.emplace_back(p.name2(), disj.right());
        Formula right = Infer(p.child(2), hyps, Sub(path, "right"));
        hyps.pop_back();
        if (left != right) {
          throw CheckError("case branches prove different formulas", path);
        }
        return left;
      }
      case K::kExFalso: {
        Formula bot = Infer(p.child(0), hyps, Sub(path, "arg"));
        if (!bot.is(Formula::Kind::kBot)) {
          throw CheckError("ex falso from a non-absurdity", Sub(path, "arg"));
        }
        return Normalize(p.ann(), path);
      }
      case K::kTT:
        return Formula::Top();
      case K::kInst: {
        const Entry* entry = env_.Find(p.uri());
        if (entry == nullptr) {
          throw CheckError("unknown library entry " + p.uri().str(), path);
        }
        std::optional<Formula> statement = StatementOf(*entry);
        if (!statement) {
          throw CheckError(p.uri().str() + " is a definition, not a lemma",
                           path);
        }
        std::set<std::string> atoms = AtomsOf(*statement);
        Substitution subst;
        for (const auto& [atom, f] : p.subst()) {
          if (!atoms.contains(atom)) {
            throw CheckError("instantiation of unknown atom " + atom, path);
          }
          subst.emplace(atom, Normalize(f, path));
        }
        if (subst.size() != atoms.size()) {
          throw CheckError("instantiation does not cover every atom", path);
        }
        return Substitute(*statement, subst);
      }
      case K::kHole:
        throw CheckError("incomplete proof", path);
    }
    throw CheckError("unknown proof term", path);
  }

 private:
  static std::string Sub(const std::string& path, const char* step) {
    return path.empty() ? step : path + "." + step;
  }

  Formula Normalize(const Formula& f, const std::string& path) {
    try {
      return UnfoldNormalize(f, env_);
    } catch (const KernelError& e) {
      throw CheckError(e.what(), path);
    }
  }

  const Environment& env_;
};

}  // namespace

Formula Infer(const ProofTerm& p, const Hypotheses& hyps,
              const Environment& env) {
  Hypotheses scope;
  scope.reserve(hyps.size());
  for (const auto& [name, f] : hyps) {
    scope.emplace_back(name, UnfoldNormalize(f, env));
  }
  return Checker(env).Infer(p, scope, "");
}

CheckResult Check(const ProofTerm& p, const Formula& goal,
                  const Environment& env) {
  try {
    Formula proven = Infer(p, {}, env);
    Formula expected = UnfoldNormalize(goal, env);
    if (proven != expected) {
      return {false, "proof establishes " + proven.DebugString() +
                         " instead of " + expected.DebugString()};
    }
    return {true, ""};
  } catch (const CheckError& e) {
    return {false, e.what()};
  } catch (const KernelError& e) {
    return {false, e.what()};
  }
}

namespace {

bool MatchInto(const Formula& schema, const Formula& goal, Substitution& out) {
  if (schema.is(Formula::Kind::kAtom)) {
    auto [it, inserted] = out.emplace(schema.name(), goal);
    return inserted || it->second == goal;
  }
  if (schema.kind() != goal.kind()) return false;
  switch (schema.kind()) {
    case Formula::Kind::kImp:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return MatchInto(schema.left(), goal.left(), out) &&
             MatchInto(schema.right(), goal.right(), out);
    case Formula::Kind::kRef:
      return schema.uri() == goal.uri();
    default:
      return true;
  }
}

}  // namespace

std::optional<Substitution> MatchConclusion(const Formula& schema,
                                            const Formula& goal) {
  Substitution subst;
  if (!MatchInto(schema, goal, subst)) return std::nullopt;
  return subst;
}

std::pair<std::vector<Formula>, Formula> SplitPremises(const Formula& f) {
  std::vector<Formula> premises;
  Formula cur = f;
  while (cur.is(Formula::Kind::kImp)) {
    premises.push_back(cur.left());
    cur = cur.right();
  }
  return {std::move(premises), std::move(cur)};
}

}  // namespace webprover
