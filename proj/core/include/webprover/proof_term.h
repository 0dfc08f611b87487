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
#ifndef WEBPROVER_PROOF_TERM_H_
#define WEBPROVER_PROOF_TERM_H_

#include <memory>
#include <string>
#include <vector>

#include "webprover/formula.h"
#include "webprover/lib_uri.h"

namespace webprover {

// Natural-deduction proof terms. Immutable; copies share structure.
//
// Hole is not a proof: it marks an open goal inside a partial proof and is
// rejected by the kernel.
class ProofTerm {
 public:
  enum class Kind {
    kHyp,      // name
    kLam,      // binder : ann . body
    kApp,      // fun arg
    kPair,     // fst snd
    kFst,      // p
    kSnd,      // p
    kInl,      // p, ann = right disjunct
    kInr,      // p, ann = left disjunct
    kCase,     // scrut, binder . left_body, binder2 . right_body
    kExFalso,  // p, ann = goal
    kTT,
    kInst,     // uri, subst
    kHole,     // hole id
  };

  // Default-constructed terms are TT.
  ProofTerm();

  static ProofTerm Hyp(std::string name);
  static ProofTerm Lam(std::string binder, Formula ann, ProofTerm body);
  static ProofTerm App(ProofTerm fun, ProofTerm arg);
  static ProofTerm Pair(ProofTerm fst, ProofTerm snd);
  static ProofTerm Fst(ProofTerm p);
  static ProofTerm Snd(ProofTerm p);
  static ProofTerm Inl(ProofTerm p, Formula right);
  static ProofTerm Inr(ProofTerm p, Formula left);
  static ProofTerm Case(ProofTerm scrut, std::string left_binder,
                        ProofTerm left_body, std::string right_binder,
                        ProofTerm right_body);
  static ProofTerm ExFalso(ProofTerm p, Formula goal);
  static ProofTerm TT();
  static ProofTerm Inst(LibUri uri, Substitution subst);
  static ProofTerm Hole(int id);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // kHyp name, kLam binder, kCase left binder.
  const std::string& name() const;
  // kCase right binder.
  const std::string& name2() const;
  // kLam/kInl/kInr/kExFalso annotation.
  const Formula& ann() const;
  // Sub-terms, in constructor argument order.
  const std::vector<ProofTerm>& children() const;
  const ProofTerm& child(std::size_t i) const { return children().at(i); }
  const LibUri& uri() const;
  const Substitution& subst() const;
  int hole() const;

  bool HasHoles() const;
  // Replaces every occurrence of Hole(id).
  ProofTerm FillHole(int id, const ProofTerm& with) const;

  // Library uris referenced by Inst nodes, in pre-order first-use order.
  std::vector<LibUri> ReferencedUris() const;

  bool operator==(const ProofTerm& other) const;
  bool operator!=(const ProofTerm& other) const { return !(*this == other); }

  std::string DebugString() const;

  struct Node;  // opaque

 private:
  explicit ProofTerm(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace webprover

#endif  // WEBPROVER_PROOF_TERM_H_
