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
#include "webprover/lib_uri.h"

#include <cctype>

namespace webprover {
namespace {

constexpr std::string_view kLibPrefix = "lib://";
constexpr std::string_view kBuiltinPrefix = "builtin://logic#";

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool IsModuleSegment(std::string_view seg) {
  if (seg.empty()) return false;
  const char first = seg.front();
  if (!std::isalnum(static_cast<unsigned char>(first)) && first != '_') {
    return false;
  }
  for (char c : seg) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
        c != '-') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view ConnectiveName(Connective c) {
  switch (c) {
    case Connective::kAnd: return "and";
    case Connective::kOr: return "or";
    case Connective::kImp: return "imp";
    case Connective::kNot: return "not";
  }
  return "";
}

std::optional<Connective> ConnectiveFromName(std::string_view name) {
  if (name == "and") return Connective::kAnd;
  if (name == "or") return Connective::kOr;
  if (name == "imp") return Connective::kImp;
  if (name == "not") return Connective::kNot;
  return std::nullopt;
}

bool IsIdentifier(std::string_view name) {
  if (name.empty() || !IsIdentStart(name.front())) return false;
  for (char c : name) {
    if (!IsIdentChar(c)) return false;
  }
  return true;
}

bool IsValidUserId(std::string_view id) {
  if (id.empty() || id.size() > 32) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '_';
    if (!ok) return false;
  }
  return true;
}

bool IsValidModulePath(std::string_view module) {
  if (module.empty()) return false;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = module.find('/', start);
    const std::string_view seg = module.substr(
        start, slash == std::string_view::npos ? std::string_view::npos
                                               : slash - start);
    if (!IsModuleSegment(seg)) return false;
    if (slash == std::string_view::npos) return true;
    start = slash + 1;
  }
}

LibUri LibUri::Library(std::string owner, std::string module,
                       std::string name) {
  LibUri uri;
  uri.owner_ = std::move(owner);
  uri.module_ = std::move(module);
  uri.name_ = std::move(name);
  uri.text_ = std::string(kLibPrefix) + uri.owner_ + "/" + uri.module_ + "#" +
              uri.name_;
  return uri;
}

LibUri LibUri::Builtin(Connective c) {
  LibUri uri;
  uri.builtin_ = true;
  uri.module_ = "logic";
  uri.name_ = std::string(ConnectiveName(c));
  uri.text_ = std::string(kBuiltinPrefix) + uri.name_;
  return uri;
}

std::optional<LibUri> LibUri::Parse(std::string_view text) {
  if (text.starts_with(kBuiltinPrefix)) {
    auto c = ConnectiveFromName(text.substr(kBuiltinPrefix.size()));
    if (!c) return std::nullopt;
    return Builtin(*c);
  }
  if (!text.starts_with(kLibPrefix)) return std::nullopt;
  text.remove_prefix(kLibPrefix.size());
  const std::size_t slash = text.find('/');
  const std::size_t hash = text.find('#');
  if (slash == std::string_view::npos || hash == std::string_view::npos ||
      hash < slash) {
    return std::nullopt;
  }
  const std::string_view owner = text.substr(0, slash);
  const std::string_view module = text.substr(slash + 1, hash - slash - 1);
  const std::string_view name = text.substr(hash + 1);
  if (!IsValidUserId(owner) || !IsValidModulePath(module) ||
      !IsIdentifier(name)) {
    return std::nullopt;
  }
  return Library(std::string(owner), std::string(module), std::string(name));
}

std::optional<Connective> LibUri::connective() const {
  if (!builtin_) return std::nullopt;
  return ConnectiveFromName(name_);
}

}  // namespace webprover
