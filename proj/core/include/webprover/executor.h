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
#ifndef WEBPROVER_EXECUTOR_H_
#define WEBPROVER_EXECUTOR_H_

#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "webprover/disambiguator.h"
#include "webprover/enricher.h"
#include "webprover/environment.h"
#include "webprover/notation.h"
#include "webprover/proof_state.h"
#include "webprover/text.h"

namespace webprover {

// Everything a session knows. Entries added by the session live under
// lib://<user>/<module>#name.
struct ProverStatus {
  std::string user;
  std::string module = "scratch";
  Environment env;
  NotationTable notation = NotationTable::Builtin();
  std::optional<ProofState> proof;

  bool operator==(const ProverStatus&) const = default;
};

// A status for user on top of a library environment; the user's module is
// made visible.
ProverStatus InitialStatus(std::string user, std::string module,
                           Environment env, NotationTable notation);

enum class ExecMode { kOne, kAll };

enum class ErrorCode { kParse, kTactic, kKernel, kOrder };

std::string_view ErrorCodeName(ErrorCode code);

struct ExecError {
  ErrorCode code;
  std::string message;
  Span span;  // in the submitted text
  bool operator==(const ExecError&) const = default;
};

struct ExecResult {
  std::size_t consumed = 0;
  std::vector<EnrichedStatement> statements;
  // Per statement; set for auto.
  std::vector<std::optional<SearchStats>> search;
  std::vector<Goal> goals;
  std::optional<ExecError> error;
  std::optional<ChoiceRequest> choices;
};

struct StepSnapshot {
  ProverStatus pre;
  EnrichedStatement enriched;
};

struct UndoResult {
  std::size_t undone = 0;
  std::size_t remaining = 0;
  std::vector<Goal> goals;
};

// A second mutating call while one is running.
class BusyError : public std::runtime_error {
 public:
  BusyError() : std::runtime_error("session is busy") {}
};

class Session {
 public:
  Session(std::string id, ProverStatus initial);

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const std::string& id() const { return id_; }

  // Executes statements from the front of text. Throws BusyError.
  ExecResult Execute(TextView text, ExecMode mode);
  // Pops steps snapshots, or all of them for nullopt. Throws BusyError.
  UndoResult Undo(std::optional<std::size_t> steps);

  std::vector<Goal> CurrentGoals() const;
  std::size_t depth() const;
  ProverStatus status() const;
  std::vector<EnrichedStatement> history() const;

 private:
  std::string id_;
  ProverStatus status_;
  std::vector<StepSnapshot> history_;
  mutable std::mutex state_mu_;  // guards status_ and history_
  std::mutex busy_mu_;           // held for the duration of a mutation
};

// Outcome of running one statement against a status.
struct StepResult {
  std::optional<EnrichedStatement> enriched;  // set on success
  std::optional<ExecError> error;
  std::optional<ChoiceRequest> choices;
  std::optional<SearchStats> search;  // auto statements
  bool blank = false;  // nothing but comments and spaces left
};

// Executes the statement starting at text[pos]. On success status is
// updated; otherwise it is untouched.
StepResult ExecuteStatement(ProverStatus& status, TextView text,
                            std::size_t pos);

struct LoadReport {
  std::size_t statements = 0;
  std::optional<ExecError> error;
  bool choices = false;
};

// Runs a whole script into status, keeping what executed before the first
// failure. An unfinished proof is dropped.
LoadReport LoadScript(ProverStatus& status, TextView script);

}  // namespace webprover

#endif  // WEBPROVER_EXECUTOR_H_
