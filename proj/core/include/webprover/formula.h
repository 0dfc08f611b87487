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
#ifndef WEBPROVER_FORMULA_H_
#define WEBPROVER_FORMULA_H_

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "webprover/lib_uri.h"

namespace webprover {

// An immutable propositional formula. Copies share structure.
//
// Negation has no node of its own: ¬A is Imp(A, Bot).
class Formula {
 public:
  enum class Kind { kAtom, kRef, kImp, kAnd, kOr, kBot, kTop };

  // Default-constructed formulas are Top.
  Formula();

  static Formula Atom(std::string name);
  static Formula Ref(LibUri uri);
  static Formula Imp(Formula left, Formula right);
  static Formula And(Formula left, Formula right);
  static Formula Or(Formula left, Formula right);
  static Formula Not(Formula operand) { return Imp(std::move(operand), Bot()); }
  static Formula Bot();
  static Formula Top();

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_binary() const;

  // Valid for kAtom.
  const std::string& name() const;
  // Valid for kRef.
  const LibUri& uri() const;
  // Valid for binary kinds.
  const Formula& left() const;
  const Formula& right() const;

  // Number of nodes.
  std::size_t Size() const;
  bool ContainsRef() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  // Structural total order, used only for sets and maps.
  bool operator<(const Formula& other) const;

  // Debug form, e.g. (imp (atom a) bot). Not the surface syntax.
  std::string DebugString() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int Compare(const Formula& a, const Formula& b);

  std::shared_ptr<const Node> node_;
};

using Substitution = std::map<std::string, Formula>;

// Atom names occurring in f, sorted.
std::set<std::string> AtomsOf(const Formula& f);

// Replaces atoms that appear in subst; other atoms are kept.
Formula Substitute(const Formula& f, const Substitution& subst);

}  // namespace webprover

#endif  // WEBPROVER_FORMULA_H_
