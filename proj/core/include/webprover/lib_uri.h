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
#ifndef WEBPROVER_LIB_URI_H_
#define WEBPROVER_LIB_URI_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace webprover {

enum class Connective { kAnd, kOr, kImp, kNot };

std::string_view ConnectiveName(Connective c);
std::optional<Connective> ConnectiveFromName(std::string_view name);

// Names a library entry or a builtin connective:
//
//   lib://<owner>/<module>#<name>
//   builtin://logic#<and|or|imp|not>
//
// Ordering and equality follow the textual form.
class LibUri {
 public:
  LibUri() = default;

  static LibUri Library(std::string owner, std::string module,
                        std::string name);
  static LibUri Builtin(Connective c);
  static std::optional<LibUri> Parse(std::string_view text);

  bool is_builtin() const { return builtin_; }
  const std::string& owner() const { return owner_; }
  const std::string& module() const { return module_; }
  // The final name segment; this is what the overload table is keyed by.
  const std::string& name() const { return name_; }
  std::optional<Connective> connective() const;

  const std::string& str() const { return text_; }

  bool operator==(const LibUri& other) const { return text_ == other.text_; }
  std::strong_ordering operator<=>(const LibUri& other) const {
    return text_ <=> other.text_;
  }

 private:
  bool builtin_ = false;
  std::string owner_;
  std::string module_;
  std::string name_;
  std::string text_;
};

bool IsValidUserId(std::string_view id);
bool IsValidModulePath(std::string_view module);
bool IsIdentifier(std::string_view name);

}  // namespace webprover

#endif  // WEBPROVER_LIB_URI_H_
