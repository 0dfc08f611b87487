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
#ifndef WEBPROVER_ENVIRONMENT_H_
#define WEBPROVER_ENVIRONMENT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "webprover/formula.h"
#include "webprover/lib_uri.h"
#include "webprover/proof_term.h"

namespace webprover {

struct Definition {
  Formula body;
  bool operator==(const Definition&) const = default;
};

struct Axiom {
  Formula statement;
  bool operator==(const Axiom&) const = default;
};

struct Lemma {
  Formula statement;
  ProofTerm proof;
  bool operator==(const Lemma&) const = default;
};

using Entry = std::variant<Definition, Axiom, Lemma>;

// Statement of an axiom or lemma; nullopt for definitions.
std::optional<Formula> StatementOf(const Entry& entry);

struct ModuleId {
  std::string owner;
  std::string module;
  auto operator<=>(const ModuleId&) const = default;
};

// A library snapshot: entries keyed by uri, the set of visible modules, and
// the overload table mapping short names to visible uris.
//
// Bodies and statements are stored unfold-normalized, so once an entry is
// in the environment it no longer mentions other definitions. Definitions
// can only refer to entries that already exist, which keeps the dependency
// graph acyclic.
class Environment {
 public:
  // Each Add* throws KernelError if the uri is taken or the formula mentions
  // an unknown definition. AddLemma also rejects proofs that do not check.
  void AddDefinition(const LibUri& uri, const Formula& body);
  void AddAxiom(const LibUri& uri, const Formula& statement);
  void AddLemma(const LibUri& uri, const Formula& statement,
                const ProofTerm& proof);
  void Remove(const LibUri& uri);

  void SetVisible(const ModuleId& module, bool visible = true);
  bool IsVisible(const LibUri& uri) const;

  const Entry* Find(const LibUri& uri) const;
  bool Contains(const LibUri& uri) const { return Find(uri) != nullptr; }

  // Visible uris whose final name segment is short_name, in uri order.
  std::vector<LibUri> Lookup(std::string_view short_name) const;

  // Visible axioms and lemmas, in uri order.
  std::vector<LibUri> VisibleStatements() const;

  const std::map<LibUri, Entry>& entries() const { return entries_; }
  const std::set<ModuleId>& visible() const { return visible_; }

  bool operator==(const Environment&) const = default;

 private:
  void Insert(const LibUri& uri, Entry entry);
  void RebuildIndex();

  std::map<LibUri, Entry> entries_;
  std::set<ModuleId> visible_;
  std::map<std::string, std::set<LibUri>, std::less<>> name_index_;
};

}  // namespace webprover

#endif  // WEBPROVER_ENVIRONMENT_H_
