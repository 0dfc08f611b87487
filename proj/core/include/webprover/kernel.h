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
#ifndef WEBPROVER_KERNEL_H_
#define WEBPROVER_KERNEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "webprover/environment.h"
#include "webprover/formula.h"
#include "webprover/proof_term.h"

namespace webprover {

// Signals a corrupted or misused environment (dangling reference, duplicate
// uri). Public paths are expected never to raise it.
class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proof term that does not follow the natural-deduction rules. path names
// the offending subterm as a dotted route from the root, e.g. "body.fun".
class CheckError : public std::runtime_error {
 public:
  CheckError(const std::string& message, std::string path)
      : std::runtime_error(message + (path.empty() ? "" : " at " + path)),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Ordered hypothesis context; later entries shadow earlier ones.
using Hypotheses = std::vector<std::pair<std::string, Formula>>;

// Replaces every Ref by the normalized body of its definition.
Formula UnfoldNormalize(const Formula& f, const Environment& env);

// The formula proven by p, normalized. Throws CheckError.
Formula Infer(const ProofTerm& p, const Hypotheses& hyps,
              const Environment& env);

struct CheckResult {
  bool accepted = false;
  std::string reason;
  explicit operator bool() const { return accepted; }
};

CheckResult Check(const ProofTerm& p, const Formula& goal,
                  const Environment& env);

// One-way matching: atoms of schema are pattern variables, goal is ground.
// Both are expected Ref-free.
std::optional<Substitution> MatchConclusion(const Formula& schema,
                                            const Formula& goal);

// Splits P1 -> ... -> Pn -> C into ([P1..Pn], C).
std::pair<std::vector<Formula>, Formula> SplitPremises(const Formula& f);

}  // namespace webprover

#endif  // WEBPROVER_KERNEL_H_
