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
#include "webprover/environment.h"

#include "webprover/kernel.h"

namespace webprover {

std::optional<Formula> StatementOf(const Entry& entry) {
  if (const auto* a = std::get_if<Axiom>(&entry)) return a->statement;
  if (const auto* l = std::get_if<Lemma>(&entry)) return l->statement;
  return std::nullopt;
}

void Environment::Insert(const LibUri& uri, Entry entry) {
  if (uri.is_builtin()) {
    throw KernelError("cannot define builtin uri " + uri.str());
  }
  if (entries_.contains(uri)) {
    throw KernelError(uri.str() + " is already defined");
  }
  entries_.emplace(uri, std::move(entry));
  if (IsVisible(uri)) name_index_[uri.name()].insert(uri);
}

void Environment::AddDefinition(const LibUri& uri, const Formula& body) {
  Insert(uri, Definition{UnfoldNormalize(body, *this)});
}

void Environment::AddAxiom(const LibUri& uri, const Formula& statement) {
  Insert(uri, Axiom{UnfoldNormalize(statement, *this)});
}

void Environment::AddLemma(const LibUri& uri, const Formula& statement,
                           const ProofTerm& proof) {
  Formula normalized = UnfoldNormalize(statement, *this);
  CheckResult result = Check(proof, normalized, *this);
  if (!result) {
    throw KernelError("proof of " + uri.str() + " rejected: " + result.reason);
  }
  Insert(uri, Lemma{std::move(normalized), proof});
}

void Environment::Remove(const LibUri& uri) {
  if (entries_.erase(uri) == 0) return;
  auto it = name_index_.find(uri.name());
  if (it != name_index_.end()) {
    it->second.erase(uri);
    if (it->second.empty()) name_index_.erase(it);
  }
}

void Environment::SetVisible(const ModuleId& module, bool visible) {
  const bool changed =
      visible ? visible_.insert(module).second : visible_.erase(module) > 0;
  if (changed) RebuildIndex();
}

bool Environment::IsVisible(const LibUri& uri) const {
  return visible_.contains(ModuleId{uri.owner(), uri.module()});
}

void Environment::RebuildIndex() {
  name_index_.clear();
  for (const auto& [uri, entry] : entries_) {
    if (IsVisible(uri)) name_index_[uri.name()].insert(uri);
  }
}

const Entry* Environment::Find(const LibUri& uri) const {
  auto it = entries_.find(uri);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<LibUri> Environment::Lookup(std::string_view short_name) const {
  auto it = name_index_.find(short_name);
  if (it == name_index_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<LibUri> Environment::VisibleStatements() const {
  std::vector<LibUri> out;
  for (const auto& [uri, entry] : entries_) {
    if (!std::holds_alternative<Definition>(entry) && IsVisible(uri)) {
      out.push_back(uri);
    }
  }
  return out;
}

}  // namespace webprover
