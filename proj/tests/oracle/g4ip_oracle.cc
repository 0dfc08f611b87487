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
#include "g4ip_oracle.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {
namespace {

using K = Prop::Kind;

PropPtr Make(K kind, std::string atom, PropPtr l, PropPtr r) {
  auto p = std::make_shared<Prop>();
  p->kind = kind;
  p->atom = std::move(atom);
  switch (kind) {
    case K::kAtom: p->key = p->atom; break;
    case K::kBot: p->key = "F"; break;
    case K::kTop: p->key = "T"; break;
    case K::kAnd: p->key = "(" + l->key + "&" + r->key + ")"; break;
    case K::kOr: p->key = "(" + l->key + "|" + r->key + ")"; break;
    case K::kImp: p->key = "(" + l->key + ">" + r->key + ")"; break;
  }
  p->l = std::move(l);
  p->r = std::move(r);
  return p;
}

// A sequent context is a sorted multiset of formulas.
using Context = std::vector<PropPtr>;

Context Sorted(Context c) {
  std::sort(c.begin(), c.end(),
            [](const PropPtr& a, const PropPtr& b) { return a->key < b->key; });
  return c;
}

Context Without(const Context& c, std::size_t i) {
  Context out = c;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Context With(Context c, std::initializer_list<PropPtr> extra) {
  for (const PropPtr& p : extra) c.push_back(p);
  return Sorted(std::move(c));
}

bool Has(const Context& c, const PropPtr& p) {
  return std::any_of(c.begin(), c.end(),
                     [&](const PropPtr& q) { return q->key == p->key; });
}

class Search {
 public:
  bool Prove(const Context& ctx, const PropPtr& goal, int h) {
    if (goal->kind == K::kTop || Has(ctx, goal)) return true;
    for (const PropPtr& p : ctx) {
      if (p->kind == K::kBot) return true;
    }
    if (h <= 0) return false;

    std::string key;
    for (const PropPtr& p : ctx) key += p->key + ",";
    key += "|" + goal->key;
    auto memo = memo_.find(key);
    if (memo != memo_.end()) {
      if (memo->second.first >= h) return false;  // failed with more room
      if (memo->second.second <= h) return true;  // succeeded with less
    }
    const bool ok = Rules(ctx, goal, h);
    auto& entry = memo_.try_emplace(key, -1, 1 << 30).first->second;
    if (ok) {
      entry.second = std::min(entry.second, h);
    } else {
      entry.first = std::max(entry.first, h);
    }
    return ok;
  }

 private:
  bool Rules(const Context& ctx, const PropPtr& goal, int h) {
    const int k = h - 1;
    switch (goal->kind) {
      case K::kAnd:
        if (Prove(ctx, goal->l, k) && Prove(ctx, goal->r, k)) return true;
        break;
      case K::kOr:
        if (Prove(ctx, goal->l, k) || Prove(ctx, goal->r, k)) return true;
        break;
      case K::kImp:
        if (Prove(With(ctx, {goal->l}), goal->r, k)) return true;
        break;
      default:
        break;
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const PropPtr& p = ctx[i];
      const Context rest = Without(ctx, i);
      if (p->kind == K::kAnd) {
        if (Prove(With(rest, {p->l, p->r}), goal, k)) return true;
      } else if (p->kind == K::kOr) {
        if (Prove(With(rest, {p->l}), goal, k) &&
            Prove(With(rest, {p->r}), goal, k)) {
          return true;
        }
      } else if (p->kind == K::kImp) {
        const PropPtr& a = p->l;
        const PropPtr& b = p->r;
        if (a->kind == K::kTop || Has(rest, a)) {
          if (Prove(With(rest, {b}), goal, k)) return true;
        }
        switch (a->kind) {
          case K::kAnd:
            if (Prove(With(rest, {Imp(a->l, Imp(a->r, b))}), goal, k)) {
              return true;
            }
            break;
          case K::kOr:
            if (Prove(With(rest, {Imp(a->l, b), Imp(a->r, b)}), goal, k)) {
              return true;
            }
            break;
          case K::kImp:
            if (Prove(With(rest, {Imp(a->r, b)}), a, k) &&
                Prove(With(rest, {b}), goal, k)) {
              return true;
            }
            break;
          default:
            break;
        }
      }
    }
    return false;
  }

  // key -> (largest failing height, smallest succeeding height)
  std::map<std::string, std::pair<int, int>> memo_;
};

}  // namespace

PropPtr Atom(const std::string& name) { return Make(K::kAtom, name, {}, {}); }
PropPtr Bot() { return Make(K::kBot, "", {}, {}); }
PropPtr Top() { return Make(K::kTop, "", {}, {}); }
PropPtr And(PropPtr a, PropPtr b) {
  return Make(K::kAnd, "", std::move(a), std::move(b));
}
PropPtr Or(PropPtr a, PropPtr b) {
  return Make(K::kOr, "", std::move(a), std::move(b));
}
PropPtr Imp(PropPtr a, PropPtr b) {
  return Make(K::kImp, "", std::move(a), std::move(b));
}

PropPtr FromFormula(const webprover::Formula& f) {
  using FK = webprover::Formula::Kind;
  switch (f.kind()) {
    case FK::kAtom: return Atom(f.name());
    case FK::kBot: return Bot();
    case FK::kTop: return Top();
    case FK::kAnd: return And(FromFormula(f.left()), FromFormula(f.right()));
    case FK::kOr: return Or(FromFormula(f.left()), FromFormula(f.right()));
    case FK::kImp: return Imp(FromFormula(f.left()), FromFormula(f.right()));
    default:
      throw std::invalid_argument("oracle: library references unsupported");
  }
}

bool Provable(const PropPtr& goal, int max_height) {
  return Search().Prove({}, goal, max_height);
}

bool Valid(const PropPtr& goal) {
  // Every G4ip premise is smaller in the multiset ordering, so a height
  // bound of a few times the formula size is never reached.
  return Provable(goal, static_cast<int>(goal->key.size()) * 4 + 8);
}

std::optional<int> MinHeight(const PropPtr& goal, int limit) {
  Search s;
  for (int h = 0; h <= limit; ++h) {
    if (s.Prove({}, goal, h)) return h;
  }
  return std::nullopt;
}

}  // namespace oracle
