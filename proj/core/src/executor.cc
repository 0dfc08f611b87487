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
#include "webprover/executor.h"

#include <utility>

#include "webprover/kernel.h"
#include "webprover/lexer.h"
#include "webprover/parser.h"

namespace webprover {
namespace {

class StepFailure {
 public:
  StepFailure(ErrorCode code, std::string message, Span span)
      : error{code, std::move(message), span} {}
  ExecError error;
};

const NameRef* DeclaredName(const StatementBody& body) {
  if (const auto* d = std::get_if<AxiomDecl>(&body)) return &d->name;
  if (const auto* d = std::get_if<DefinitionDecl>(&body)) return &d->name;
  if (const auto* d = std::get_if<TheoremDecl>(&body)) return &d->name;
  return nullptr;
}

const char* HeadName(const StatementBody& body) {
  if (std::holds_alternative<AxiomDecl>(body)) return "axiom";
  if (std::holds_alternative<DefinitionDecl>(body)) return "definition";
  return "theorem";
}

void CheckOrder(const ProverStatus& status, const StatementAst& st) {
  const bool open = status.proof.has_value();
  if (const NameRef* name = DeclaredName(st.body)) {
    if (open) {
      throw StepFailure(ErrorCode::kOrder,
                        std::string(HeadName(st.body)) +
                            " inside the proof of " + status.proof->theorem,
                        st.core);
    }
    const LibUri uri = LibUri::Library(status.user, status.module, name->name);
    if (status.env.Contains(uri)) {
      throw StepFailure(ErrorCode::kOrder, name->name + " is already defined",
                        st.core);
    }
  } else if (std::holds_alternative<TacticStmt>(st.body)) {
    if (!open) {
      throw StepFailure(ErrorCode::kOrder, "no proof is open", st.core);
    }
    if (status.proof->goals.empty()) {
      throw StepFailure(ErrorCode::kOrder, "no goals left; use qed", st.core);
    }
  } else if (std::holds_alternative<QedStmt>(st.body)) {
    if (!open) {
      throw StepFailure(ErrorCode::kOrder, "no proof is open", st.core);
    }
    if (!status.proof->goals.empty()) {
      throw StepFailure(ErrorCode::kOrder,
                        std::to_string(status.proof->goals.size()) +
                            " goals are still open",
                        st.core);
    }
  }
}

Formula ElaborateOrFail(const FormulaAst& ast, const Resolution& res,
                        const Environment& env, Span span) {
  try {
    return Elaborate(ast, res, env);
  } catch (const KernelError& e) {
    throw StepFailure(ErrorCode::kParse, e.what(), span);
  }
}

struct Evaluation {
  std::optional<AutoTrace> trace;  // untraced auto only
  std::optional<SearchStats> stats;
};

// Applies st to status.
Evaluation Evaluate(ProverStatus& status, const StatementAst& st,
                    const Resolution& res) {
  const auto uri_for = [&](const NameRef& n) {
    return LibUri::Library(status.user, status.module, n.name);
  };
  Evaluation ev;
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        try {
          if constexpr (std::is_same_v<T, AxiomDecl>) {
            status.env.AddAxiom(
                uri_for(body.name),
                ElaborateOrFail(body.formula, res, status.env, st.core));
          } else if constexpr (std::is_same_v<T, DefinitionDecl>) {
            status.env.AddDefinition(
                uri_for(body.name),
                ElaborateOrFail(body.formula, res, status.env, st.core));
          } else if constexpr (std::is_same_v<T, TheoremDecl>) {
            status.proof = StartProof(
                body.name.name,
                ElaborateOrFail(body.formula, res, status.env, st.core));
          } else if constexpr (std::is_same_v<T, NotationStmt>) {
            status.notation = status.notation.Register(body.decl);
          } else if constexpr (std::is_same_v<T, TacticStmt>) {
            const Tactic tac = ElaborateTactic(body.tactic, res);
            TacticOutcome out = ApplyTactic(*status.proof, tac, status.env);
            status.proof = std::move(out.state);
            const auto* aut = std::get_if<AutoAst>(&body.tactic);
            if (aut != nullptr && !aut->trace) ev.trace = out.trace;
            ev.stats = out.stats;
          } else {
            const ProofState& ps = *status.proof;
            status.env.AddLemma(
                LibUri::Library(status.user, status.module, ps.theorem),
                ps.statement, ps.proof);
            status.proof.reset();
          }
        } catch (const NotationError& e) {
          throw StepFailure(ErrorCode::kParse, e.what(), st.core);
        } catch (const TacticError& e) {
          throw StepFailure(ErrorCode::kTactic, e.what(), st.core);
        } catch (const ProofRejected& e) {
          throw StepFailure(ErrorCode::kKernel, e.what(), st.core);
        } catch (const KernelError& e) {
          throw StepFailure(ErrorCode::kKernel, e.what(), st.core);
        }
      },
      st.body);
  return ev;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kTactic: return "tactic";
    case ErrorCode::kKernel: return "kernel";
    case ErrorCode::kOrder: return "order";
  }
  return "";
}

ProverStatus InitialStatus(std::string user, std::string module,
                           Environment env, NotationTable notation) {
  ProverStatus s;
  s.user = std::move(user);
  s.module = std::move(module);
  s.env = std::move(env);
  s.env.SetVisible(ModuleId{s.user, s.module});
  s.notation = std::move(notation);
  return s;
}

StepResult ExecuteStatement(ProverStatus& status, TextView text,
                            std::size_t pos) {
  StepResult result;
  try {
    LexedText lexed;
    try {
      lexed = Lex(text, status.notation, pos, LexOptions{.stop_after_dot = true});
    } catch (const LexError& e) {
      throw StepFailure(ErrorCode::kParse, e.what(), e.span());
    }
    if (lexed.Blank()) {
      result.blank = true;
      return result;
    }
    StatementAst st;
    try {
      st = ParseStatement(lexed, status.notation, 0).first;
    } catch (const ParseError& e) {
      throw StepFailure(ErrorCode::kParse, e.what(), e.span());
    }
    CheckOrder(status, st);

    const Goal* goal = nullptr;
    if (status.proof && !status.proof->goals.empty()) {
      goal = &status.proof->goals.front();
    }
    DisambiguationOutcome dis =
        Disambiguate(st, lexed, DisambiguationContext{status.env, goal});
    if (auto* choice = std::get_if<ChoiceRequest>(&dis)) {
      result.choices = std::move(*choice);
      return result;
    }
    if (auto* err = std::get_if<DisambiguationError>(&dis)) {
      throw StepFailure(ErrorCode::kParse, err->message, err->span);
    }
    const Resolution& res = std::get<Resolution>(dis);

    ProverStatus next = status;
    const Evaluation ev = Evaluate(next, st, res);
    result.enriched = Enrich(st, lexed, res, ev.trace);
    result.search = ev.stats;
    status = std::move(next);
  } catch (const StepFailure& f) {
    result.error = f.error;
  }
  return result;
}

LoadReport LoadScript(ProverStatus& status, TextView script) {
  LoadReport report;
  std::size_t pos = 0;
  while (true) {
    StepResult step = ExecuteStatement(status, script, pos);
    if (step.blank) break;
    if (!step.enriched) {
      report.error = step.error;
      report.choices = step.choices.has_value();
      break;
    }
    pos = step.enriched->original.end;
    ++report.statements;
  }
  status.proof.reset();
  return report;
}

Session::Session(std::string id, ProverStatus initial)
    : id_(std::move(id)), status_(std::move(initial)) {}

ExecResult Session::Execute(TextView text, ExecMode mode) {
  std::unique_lock busy(busy_mu_, std::try_to_lock);
  if (!busy.owns_lock()) throw BusyError();

  ProverStatus status = this->status();
  ExecResult result;
  std::vector<StepSnapshot> pushed;
  std::size_t pos = 0;
  while (true) {
    ProverStatus pre = status;
    StepResult step = ExecuteStatement(status, text, pos);
    if (step.blank) break;
    if (!step.enriched) {
      result.error = std::move(step.error);
      result.choices = std::move(step.choices);
      break;
    }
    pos = step.enriched->original.end;
    result.statements.push_back(*step.enriched);
    result.search.push_back(step.search);
    pushed.push_back(StepSnapshot{std::move(pre), std::move(*step.enriched)});
    if (mode == ExecMode::kOne) break;
  }
  result.consumed = pos;
  if (status.proof) result.goals = status.proof->goals;

  std::lock_guard lock(state_mu_);
  status_ = std::move(status);
  for (StepSnapshot& s : pushed) history_.push_back(std::move(s));
  return result;
}

UndoResult Session::Undo(std::optional<std::size_t> steps) {
  std::unique_lock busy(busy_mu_, std::try_to_lock);
  if (!busy.owns_lock()) throw BusyError();

  std::lock_guard lock(state_mu_);
  UndoResult out;
  const std::size_t n =
      steps ? std::min(*steps, history_.size()) : history_.size();
  if (n > 0) {
    const std::size_t keep = history_.size() - n;
    status_ = std::move(history_[keep].pre);
    history_.resize(keep);
  }
  out.undone = n;
  out.remaining = history_.size();
  if (status_.proof) out.goals = status_.proof->goals;
  return out;
}

std::vector<Goal> Session::CurrentGoals() const {
  std::lock_guard lock(state_mu_);
  return status_.proof ? status_.proof->goals : std::vector<Goal>{};
}

std::size_t Session::depth() const {
  std::lock_guard lock(state_mu_);
  return history_.size();
}

ProverStatus Session::status() const {
  std::lock_guard lock(state_mu_);
  return status_;
}

std::vector<EnrichedStatement> Session::history() const {
  std::lock_guard lock(state_mu_);
  std::vector<EnrichedStatement> out;
  for (const StepSnapshot& s : history_) out.push_back(s.enriched);
  return out;
}

}  // namespace webprover
