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
#include "webprover/render.h"

namespace webprover {
namespace {

constexpr int kImpPriority = 10;
constexpr int kOrPriority = 20;
constexpr int kAndPriority = 30;
constexpr int kNotPriority = 40;
constexpr int kLeafPriority = 100;

bool IsNegation(const Formula& f) {
  return f.is(Formula::Kind::kImp) && f.right().is(Formula::Kind::kBot);
}

int Priority(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kImp:
      return IsNegation(f) ? kNotPriority : kImpPriority;
    case Formula::Kind::kOr: return kOrPriority;
    case Formula::Kind::kAnd: return kAndPriority;
    default: return kLeafPriority;
  }
}

void Render(const Formula& f, std::string& out);

void RenderChild(const Formula& f, bool parens, std::string& out) {
  if (parens) out += "(";
  Render(f, out);
  if (parens) out += ")";
}

void Render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: out += f.name(); return;
    case Formula::Kind::kRef: out += f.uri().name(); return;
    case Formula::Kind::kBot: out += "⊥"; return;
    case Formula::Kind::kTop: out += "⊤"; return;
    default: break;
  }
  if (IsNegation(f)) {
    out += "¬";
    RenderChild(f.left(), Priority(f.left()) < kNotPriority, out);
    return;
  }
  const int p = Priority(f);
  const char* op = f.is(Formula::Kind::kImp)   ? " → "
                   : f.is(Formula::Kind::kOr)  ? " ∨ "
                                               : " ∧ ";
  // All builtin binary connectives associate to the right.
  RenderChild(f.left(), Priority(f.left()) <= p, out);
  out += op;
  RenderChild(f.right(), Priority(f.right()) < p, out);
}

}  // namespace

std::string RenderFormula(const Formula& f) {
  std::string out;
  Render(f, out);
  return out;
}

}  // namespace webprover
