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
#include "support/corpus.h"

#include <algorithm>
#include <random>

namespace webprover::testing {
namespace {

const LibUri kLogicConj = LibUri::Library("shared", "logic", "conj_comm");
const LibUri kAltConj = LibUri::Library("shared", "alt", "conj_comm");
const LibUri kLogicTruth = LibUri::Library("shared", "logic", "truth");
const LibUri kAltTruth = LibUri::Library("shared", "alt", "truth");
const LibUri kAnd = LibUri::Builtin(Connective::kAnd);
const LibUri kOr = LibUri::Builtin(Connective::kOr);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  CorpusScript Script(std::size_t n) {
    CorpusScript s;
    s.name = "corpus_" + std::to_string(n);
    user_notation_ = false;
    const int blocks = Pick(2, 5);
    for (int b = 0; b < blocks; ++b) Block(s, b);
    if (Pick(0, 1) == 1) s.text += "(* trailing remark *)\n";
    return s;
  }

 private:
  int Pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  void Atoms(std::string& x, std::string& y) {
    static const char* kAtoms[] = {"p", "q", "r", "s"};
    const int i = Pick(0, 3);
    int j = Pick(0, 2);
    if (j >= i) ++j;
    x = kAtoms[i];
    y = kAtoms[j];
  }

  void Block(CorpusScript& s, int b) {
    std::string x, y;
    Atoms(x, y);
    const std::string t = "t" + std::to_string(b);
    std::string& out = s.text;
    switch (Pick(0, 10)) {
      case 0: {  // & as and
        out += "theorem " + t + " : " + x + " & " + y + " → " + y + " & " +
               x + ".\nauto.\nqed.\n";
        s.intents.insert(s.intents.end(), {kAnd, kAnd});
        break;
      }
      case 1: {  // & as or
        out += "theorem " + t + " : " + x + " & " + y + " → " + y + " & " +
               x + ".\n  auto.\nqed.\n";
        s.intents.insert(s.intents.end(), {kOr, kOr});
        break;
      }
      case 2:
        out += "theorem " + t + " : " + x + " ∧ " + y + " → " + y + " ∧ " +
               x + ".\nintro H.\napply conj_comm.\nexact H.\nqed.\n";
        break;
      case 3:
        out += "theorem " + t + " : " + x + " ∨ " + y + " → " + y + " ∨ " +
               x + ".\nintro H. apply conj_comm. exact H.\nqed.\n";
        break;
      case 4:
        out += "theorem " + t + " : truth.\nauto.\nqed.\n";
        s.intents.push_back(Pick(0, 1) ? kLogicTruth : kAltTruth);
        break;
      case 5:
        out += "theorem " + t + " : " + x + " ∧ " + y + " → " + y + " ∧ " +
               x + ".\nintro H.\nauto using conj_comm.\nqed.\n";
        s.intents.push_back(kLogicConj);
        break;
      case 6:
        if (!user_notation_) {
          out += "notation infixl \"++\" for or priority 15.\n";
          user_notation_ = true;
        }
        out += "theorem " + t + " : " + x + " ++ " + y + " → " + y + " ++ " +
               x + ".\nauto.\nqed.\n";
        break;
      case 7:
        out += "theorem " + t + " : " + x + " → (" + x + " → " + y + ") → " +
               y + ".\nintro H1.\nintro H2.\napply H2.\nexact H1.\nqed.\n";
        break;
      case 8:
        out += "(* a comment with <b>markup</b> *)\ntheorem " + t + " : " + x +
               " ∨ " + y + " → " + y + " ∨ " + x +
               ".\nintro H.\nelim H.\nright.\nassumption.\nleft.\n"
               "assumption.\nqed.\n";
        break;
      case 9:
        out += "definition d" + std::to_string(b) + " := " + x + " ∧ " + y +
               ".\ntheorem " + t + " : d" + std::to_string(b) + " → " + x +
               ".\nintro H.\nelim H.\nassumption.\nqed.\n";
        break;
      default:
        out += "theorem " + t + " : " + x + " /\\ " + y + " -> " + x + " \\/ " +
               y + ".\nauto.\nqed.\n";
        break;
    }
  }

  std::mt19937_64 rng_;
  bool user_notation_ = false;
};

}  // namespace

std::map<std::string, std::string> CorpusLibraryFiles() {
  return {
      {"logic.ma",
       "(* conjunction facts *)\n"
       "notation infixr \"&\" for and priority 30.\n"
       "theorem conj_comm : a ∧ b → b ∧ a.\n"
       "intro H. elim H. split. assumption. assumption.\nqed.\n"
       "definition truth := ⊤.\n"},
      {"alt.ma",
       "(* disjunction facts *)\n"
       "notation infixr \"&\" for or priority 20.\n"
       "theorem conj_comm : a ∨ b → b ∨ a.\n"
       "intro H. elim H. right. assumption. left. assumption.\nqed.\n"
       "definition truth := ¬⊥.\n"},
  };
}

std::vector<CorpusScript> GenerateCorpus(std::size_t count, std::uint64_t seed) {
  Generator gen(seed);
  std::vector<CorpusScript> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.Script(i));
  return out;
}

DriveOutcome Drive(Session& session, const CorpusScript& script, ExecMode mode,
                   const std::function<void(const ExecCall&)>& observe) {
  DriveOutcome out;
  Text remainder = ToText(script.text);
  std::size_t next_intent = 0;
  while (true) {
    ExecResult r = session.Execute(remainder, mode);
    if (observe) observe(ExecCall{remainder, r});
    for (const EnrichedStatement& st : r.statements) {
      out.enriched_script += st.text;
      out.statements.push_back(st);
    }
    const std::size_t consumed = r.consumed;
    if (r.error) {
      out.failure = "error at " + std::to_string(r.error->span.start) + ": " +
                    r.error->message;
      return out;
    }
    if (r.choices) {
      ++out.choice_requests;
      if (next_intent >= script.intents.size()) {
        out.failure = "unexpected choice for " + r.choices->lexeme;
        return out;
      }
      const LibUri& want = script.intents[next_intent++];
      const bool offered = std::any_of(
          r.choices->candidates.begin(), r.choices->candidates.end(),
          [&](const Candidate& c) { return c.uri == want; });
      if (!offered) {
        out.failure = "intended " + want.str() + " not offered";
        return out;
      }
      // Offsets are in the submitted text; the client locks the consumed
      // prefix and wraps the lexeme in what is left.
      remainder.erase(0, consumed);
      const std::size_t at = r.choices->span.start - consumed;
      const std::size_t len = r.choices->span.length();
      remainder.insert(at + len, U"</A>");
      remainder.insert(at, ToText("<A href=\"" + want.str() + "\">"));
      continue;
    }
    remainder.erase(0, consumed);
    if (r.statements.empty()) break;
  }
  if (next_intent != script.intents.size()) {
    out.failure = "only " + std::to_string(next_intent) + " of " +
                  std::to_string(script.intents.size()) + " choices came up";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace webprover::testing
