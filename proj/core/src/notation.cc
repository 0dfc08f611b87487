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
#include "webprover/notation.h"

#include <algorithm>
#include <cctype>

#include "webprover/text.h"

namespace webprover {
namespace {

constexpr std::string_view kBot = "⊥";
constexpr std::string_view kTop = "⊤";

}  // namespace

std::string_view FixityName(Fixity f) {
  switch (f) {
    case Fixity::kInfixl: return "infixl";
    case Fixity::kInfixr: return "infixr";
    case Fixity::kPrefix: return "prefix";
  }
  return "";
}

NotationTable NotationTable::Builtin() {
  NotationTable t;
  auto add = [&t](std::string symbol, Connective c, Fixity f, int prio) {
    t.entries_[std::move(symbol)].push_back(NotationEntry{c, f, prio});
  };
  add("→", Connective::kImp, Fixity::kInfixr, 10);
  add("->", Connective::kImp, Fixity::kInfixr, 10);
  add("∨", Connective::kOr, Fixity::kInfixr, 20);
  add("\\/", Connective::kOr, Fixity::kInfixr, 20);
  add("∧", Connective::kAnd, Fixity::kInfixr, 30);
  add("/\\", Connective::kAnd, Fixity::kInfixr, 30);
  add("¬", Connective::kNot, Fixity::kPrefix, 40);
  add("~", Connective::kNot, Fixity::kPrefix, 40);
  t.RebuildSymbols();
  return t;
}

NotationTable NotationTable::Register(const NotationDecl& decl) const {
  const std::string& sym = decl.symbol;
  if (sym.empty()) throw NotationError("notation symbol is empty");
  if (sym.front() == '<') {
    throw NotationError("notation symbols may not start with '<'");
  }
  const auto first = static_cast<unsigned char>(sym.front());
  if (std::isalnum(first) || first == '_') {
    throw NotationError("notation symbols may not start like an identifier");
  }
  for (char c : sym) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw NotationError("notation symbols may not contain whitespace");
    }
    if (c == '.' || c == '(' || c == ')' || c == '"') {
      throw NotationError(std::string("notation symbols may not contain '") +
                          c + "'");
    }
  }
  for (std::string_view reserved : kStructuralSymbols) {
    if (sym == reserved) throw NotationError("'" + sym + "' is reserved");
  }
  if (sym == kBot || sym == kTop) {
    throw NotationError("'" + sym + "' is reserved");
  }
  try {
    DecodeUtf8(sym);
  } catch (const Utf8Error&) {
    throw NotationError("notation symbol is not valid UTF-8");
  }
  auto connective = ConnectiveFromName(decl.connective);
  if (!connective) {
    throw NotationError("unknown connective '" + decl.connective + "'");
  }
  if (decl.priority < 1 || decl.priority > 99) {
    throw NotationError("notation priority must be within 1..99");
  }
  const bool is_not = *connective == Connective::kNot;
  if (is_not != (decl.fixity == Fixity::kPrefix)) {
    throw NotationError(is_not ? "'not' notations must be prefix"
                               : "prefix notations are only allowed for 'not'");
  }

  NotationEntry entry{*connective, decl.fixity, decl.priority};
  NotationTable out = *this;
  std::vector<NotationEntry>& entries = out.entries_[sym];
  for (const NotationEntry& existing : entries) {
    if (existing == entry) return out;
    if (existing.connective == entry.connective) {
      throw NotationError("'" + sym + "' is already declared for " +
                          std::string(ConnectiveName(entry.connective)) +
                          " with a different fixity or priority");
    }
  }
  entries.push_back(entry);
  out.RebuildSymbols();
  return out;
}

const std::vector<NotationEntry>* NotationTable::Find(
    std::string_view symbol) const {
  auto it = entries_.find(symbol);
  return it == entries_.end() ? nullptr : &it->second;
}

bool NotationTable::IsOverloaded(std::string_view symbol) const {
  const auto* entries = Find(symbol);
  return entries != nullptr && entries->size() >= 2;
}

std::optional<Formula> NotationTable::Constant(std::string_view symbol) const {
  if (symbol == kBot) return Formula::Bot();
  if (symbol == kTop) return Formula::Top();
  return std::nullopt;
}

void NotationTable::RebuildSymbols() {
  lexer_symbols_.clear();
  for (const auto& [sym, entries] : entries_) lexer_symbols_.push_back(sym);
  lexer_symbols_.emplace_back(kBot);
  lexer_symbols_.emplace_back(kTop);
  for (std::string_view s : kStructuralSymbols) lexer_symbols_.emplace_back(s);
  // Longest first in scalars so that maximal munch is a linear scan.
  std::stable_sort(lexer_symbols_.begin(), lexer_symbols_.end(),
                   [](const std::string& a, const std::string& b) {
                     return ScalarCount(a) > ScalarCount(b);
                   });
}

}  // namespace webprover
