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
#include "webprover/proof_term.h"

#include <algorithm>
#include <stdexcept>

namespace webprover {

struct ProofTerm::Node {
  Kind kind = Kind::kTT;
  std::string name;
  std::string name2;
  Formula ann;
  std::vector<ProofTerm> children;
  LibUri uri;
  Substitution subst;
  int hole = -1;
  bool has_holes = false;
};

namespace {

using Node = ProofTerm::Node;

const std::vector<ProofTerm>& NoChildren() {
  static const auto* const kEmpty = new std::vector<ProofTerm>();
  return *kEmpty;
}

}  // namespace

ProofTerm::ProofTerm() = default;

namespace {

std::shared_ptr<Node> NewNode(ProofTerm::Kind kind,
                              std::vector<ProofTerm> children = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->has_holes = std::any_of(children.begin(), children.end(),
                             [](const ProofTerm& c) { return c.HasHoles(); });
  n->children = std::move(children);
  return n;
}

}  // namespace

ProofTerm ProofTerm::Hyp(std::string name) {
  auto n = NewNode(Kind::kHyp);
  n->name = std::move(name);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::Lam(std::string binder, Formula ann, ProofTerm body) {
  auto n = NewNode(Kind::kLam, {std::move(body)});
  n->name = std::move(binder);
  n->ann = std::move(ann);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::App(ProofTerm fun, ProofTerm arg) {
  return ProofTerm(NewNode(Kind::kApp, {std::move(fun), std::move(arg)}));
}

ProofTerm ProofTerm::Pair(ProofTerm fst, ProofTerm snd) {
  return ProofTerm(NewNode(Kind::kPair, {std::move(fst), std::move(snd)}));
}

ProofTerm ProofTerm::Fst(ProofTerm p) {
  return ProofTerm(NewNode(Kind::kFst, {std::move(p)}));
}

ProofTerm ProofTerm::Snd(ProofTerm p) {
  return ProofTerm(NewNode(Kind::kSnd, {std::move(p)}));
}

ProofTerm ProofTerm::Inl(ProofTerm p, Formula right) {
  auto n = NewNode(Kind::kInl, {std::move(p)});
  n->ann = std::move(right);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::Inr(ProofTerm p, Formula left) {
  auto n = NewNode(Kind::kInr, {std::move(p)});
  n->ann = std::move(left);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::Case(ProofTerm scrut, std::string left_binder,
                          ProofTerm left_body, std::string right_binder,
                          ProofTerm right_body) {
  auto n = NewNode(Kind::kCase, {std::move(scrut), std::move(left_body),
                                 std::move(right_body)});
  n->name = std::move(left_binder);
  n->name2 = std::move(right_binder);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::ExFalso(ProofTerm p, Formula goal) {
  auto n = NewNode(Kind::kExFalso, {std::move(p)});
  n->ann = std::move(goal);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::TT() { return ProofTerm(); }

ProofTerm ProofTerm::Inst(LibUri uri, Substitution subst) {
  auto n = NewNode(Kind::kInst);
  n->uri = std::move(uri);
  n->subst = std::move(subst);
  return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::Hole(int id) {
  auto n = NewNode(Kind::kHole);
  n->hole = id;
  n->has_holes = true;
  return ProofTerm(std::move(n));
}

ProofTerm::Kind ProofTerm::kind() const {
  return node_ ? node_->kind : Kind::kTT;
}

const std::string& ProofTerm::name() const {
  static const std::string kEmpty;
  return node_ ? node_->name : kEmpty;
}

const std::string& ProofTerm::name2() const {
  static const std::string kEmpty;
  return node_ ? node_->name2 : kEmpty;
}

const Formula& ProofTerm::ann() const {
  static const Formula kTop;
  return node_ ? node_->ann : kTop;
}

const std::vector<ProofTerm>& ProofTerm::children() const {
  return node_ ? node_->children : NoChildren();
}

const LibUri& ProofTerm::uri() const {
  if (kind() != Kind::kInst) throw std::logic_error("ProofTerm::uri on non-Inst");
  return node_->uri;
}

const Substitution& ProofTerm::subst() const {
  if (kind() != Kind::kInst) {
    throw std::logic_error("ProofTerm::subst on non-Inst");
  }
  return node_->subst;
}

int ProofTerm::hole() const { return node_ ? node_->hole : -1; }

bool ProofTerm::HasHoles() const { return node_ && node_->has_holes; }

ProofTerm ProofTerm::FillHole(int id, const ProofTerm& with) const {
  if (!HasHoles()) return *this;
  if (kind() == Kind::kHole) return hole() == id ? with : *this;
  auto n = std::make_shared<Node>(*node_);
  bool holes = false;
  for (ProofTerm& c : n->children) {
    c = c.FillHole(id, with);
    holes = holes || c.HasHoles();
  }
  n->has_holes = holes;
  return ProofTerm(std::move(n));
}

namespace {

void CollectUris(const ProofTerm& p, std::vector<LibUri>& out) {
  if (p.is(ProofTerm::Kind::kInst)) {
    if (std::find(out.begin(), out.end(), p.uri()) == out.end()) {
      out.push_back(p.uri());
    }
  }
  for (const ProofTerm& c : p.children()) CollectUris(c, out);
}

}  // namespace

std::vector<LibUri> ProofTerm::ReferencedUris() const {
  std::vector<LibUri> out;
  CollectUris(*this, out);
  return out;
}

bool ProofTerm::operator==(const ProofTerm& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  if (!node_ || !other.node_) return true;  // both TT
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.name == b.name && a.name2 == b.name2 && a.ann == b.ann &&
         a.children == b.children && a.uri == b.uri && a.subst == b.subst &&
         a.hole == b.hole;
}

std::string ProofTerm::DebugString() const {
  auto kids = [this](std::string head) {
    for (const ProofTerm& c : children()) head += " " + c.DebugString();
    return "(" + head + ")";
  };
  switch (kind()) {
    case Kind::kHyp: return name();
    case Kind::kLam:
      return "(lam " + name() + ":" + ann().DebugString() + " " +
             child(0).DebugString() + ")";
    case Kind::kApp: return kids("app");
    case Kind::kPair: return kids("pair");
    case Kind::kFst: return kids("fst");
    case Kind::kSnd: return kids("snd");
    case Kind::kInl: return kids("inl");
    case Kind::kInr: return kids("inr");
    case Kind::kCase:
      return "(case " + child(0).DebugString() + " " + name() + "." +
             child(1).DebugString() + " " + name2() + "." +
             child(2).DebugString() + ")";
    case Kind::kExFalso: return kids("exfalso");
    case Kind::kTT: return "tt";
    case Kind::kInst: {
      std::string s = "(inst " + uri().str();
      for (const auto& [atom, f] : subst()) {
        s += " " + atom + ":=" + f.DebugString();
      }
      return s + ")";
    }
    case Kind::kHole: return "?" + std::to_string(hole());
  }
  return "?";
}

}  // namespace webprover
