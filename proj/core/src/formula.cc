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
#include "webprover/formula.h"

#include <stdexcept>

namespace webprover {

struct Formula::Node {
  Kind kind = Kind::kTop;
  std::string name;
  LibUri uri;
  Formula left;
  Formula right;
  std::size_t size = 1;
  bool has_ref = false;
};

Formula::Formula() : node_(nullptr) {}

Formula Formula::Atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::Ref(LibUri uri) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRef;
  n->uri = std::move(uri);
  n->has_ref = true;
  return Formula(std::move(n));
}

namespace {

template <typename NodeT, typename F>
std::shared_ptr<NodeT> MakeBinary(Formula::Kind kind, F left, F right) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->size = 1 + left.Size() + right.Size();
  n->has_ref = left.ContainsRef() || right.ContainsRef();
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

}  // namespace

Formula Formula::Imp(Formula left, Formula right) {
  return Formula(MakeBinary<Node>(Kind::kImp, std::move(left), std::move(right)));
}

Formula Formula::And(Formula left, Formula right) {
  return Formula(MakeBinary<Node>(Kind::kAnd, std::move(left), std::move(right)));
}

Formula Formula::Or(Formula left, Formula right) {
  return Formula(MakeBinary<Node>(Kind::kOr, std::move(left), std::move(right)));
}

Formula Formula::Bot() {
  static const auto* const kBot = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kBot;
    return new std::shared_ptr<const Node>(std::move(n));
  }();
  return Formula(*kBot);
}

Formula Formula::Top() { return Formula(); }

Formula::Kind Formula::kind() const {
  return node_ ? node_->kind : Kind::kTop;
}

bool Formula::is_binary() const {
  const Kind k = kind();
  return k == Kind::kImp || k == Kind::kAnd || k == Kind::kOr;
}

const std::string& Formula::name() const {
  if (kind() != Kind::kAtom) throw std::logic_error("Formula::name on non-atom");
  return node_->name;
}

const LibUri& Formula::uri() const {
  if (kind() != Kind::kRef) throw std::logic_error("Formula::uri on non-ref");
  return node_->uri;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("Formula::left on non-binary");
  return node_->left;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("Formula::right on non-binary");
  return node_->right;
}

std::size_t Formula::Size() const { return node_ ? node_->size : 1; }

bool Formula::ContainsRef() const { return node_ && node_->has_ref; }

int Formula::Compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  const Kind ka = a.kind();
  const Kind kb = b.kind();
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (ka) {
    case Kind::kAtom:
      return a.node_->name.compare(b.node_->name);
    case Kind::kRef:
      return a.node_->uri.str().compare(b.node_->uri.str());
    case Kind::kBot:
    case Kind::kTop:
      return 0;
    case Kind::kImp:
    case Kind::kAnd:
    case Kind::kOr: {
      if (a.Size() != b.Size()) return a.Size() < b.Size() ? -1 : 1;
      const int l = Compare(a.node_->left, b.node_->left);
      if (l != 0) return l;
      return Compare(a.node_->right, b.node_->right);
    }
  }
  return 0;
}

bool Formula::operator==(const Formula& other) const {
  return Compare(*this, other) == 0;
}

bool Formula::operator<(const Formula& other) const {
  return Compare(*this, other) < 0;
}

std::string Formula::DebugString() const {
  switch (kind()) {
    case Kind::kAtom: return name();
    case Kind::kRef: return "<" + uri().str() + ">";
    case Kind::kBot: return "bot";
    case Kind::kTop: return "top";
    case Kind::kImp:
      return "(imp " + left().DebugString() + " " + right().DebugString() + ")";
    case Kind::kAnd:
      return "(and " + left().DebugString() + " " + right().DebugString() + ")";
    case Kind::kOr:
      return "(or " + left().DebugString() + " " + right().DebugString() + ")";
  }
  return "?";
}

namespace {

void CollectAtoms(const Formula& f, std::set<std::string>& out) {
  if (f.is(Formula::Kind::kAtom)) {
    out.insert(f.name());
  } else if (f.is_binary()) {
    CollectAtoms(f.left(), out);
    CollectAtoms(f.right(), out);
  }
}

}  // namespace

std::set<std::string> AtomsOf(const Formula& f) {
  std::set<std::string> out;
  CollectAtoms(f, out);
  return out;
}

Formula Substitute(const Formula& f, const Substitution& subst) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = subst.find(f.name());
      return it == subst.end() ? f : it->second;
    }
    case Formula::Kind::kImp:
      return Formula::Imp(Substitute(f.left(), subst),
                          Substitute(f.right(), subst));
    case Formula::Kind::kAnd:
      return Formula::And(Substitute(f.left(), subst),
                          Substitute(f.right(), subst));
    case Formula::Kind::kOr:
      return Formula::Or(Substitute(f.left(), subst),
                         Substitute(f.right(), subst));
    default:
      return f;
  }
}

}  // namespace webprover
