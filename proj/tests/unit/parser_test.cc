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
#include "webprover/parser.h"

#include <gtest/gtest.h>

#include "support/test_util.h"

namespace webprover {
namespace {

using testing::F;

StatementAst P(std::u32string_view text,
               const NotationTable& t = NotationTable::Builtin()) {
  const LexedText l = Lex(text, t);
  return ParseStatement(l, t, 0).first;
}

template <typename T>
const T& As(const StatementAst& st) {
  return std::get<T>(st.body);
}

template <typename T>
const T& Tac(const StatementAst& st) {
  return std::get<T>(As<TacticStmt>(st).tactic);
}

TEST(ParserTest, Declarations) {
  const StatementAst th = P(U"theorem conj_comm : a ∧ b → b ∧ a.");
  EXPECT_EQ(As<TheoremDecl>(th).name.name, "conj_comm");
  EXPECT_EQ(FormulaFromAst(As<TheoremDecl>(th).formula), F("a ∧ b → b ∧ a"));
  EXPECT_EQ(th.core, (Span{0, 34}));
  EXPECT_EQ(As<AxiomDecl>(P(U"axiom ex : ⊥ → a.")).name.name, "ex");
  EXPECT_EQ(FormulaFromAst(As<DefinitionDecl>(P(U"definition nt := ¬⊤.")).formula),
            F("¬⊤"));
  const auto& n = As<NotationStmt>(P(U"notation infixr \"=>\" for imp priority 20.")).decl;
  EXPECT_EQ(n.symbol, "=>");
  EXPECT_EQ(n.fixity, Fixity::kInfixr);
  EXPECT_EQ(n.priority, 20);
  EXPECT_EQ(n.connective, "imp");
  EXPECT_TRUE(std::holds_alternative<QedStmt>(P(U"qed.").body));
}

TEST(ParserTest, Tactics) {
  EXPECT_FALSE(Tac<IntroAst>(P(U"intro.")).name);
  EXPECT_EQ(Tac<IntroAst>(P(U"intro H.")).name->name, "H");
  EXPECT_EQ(Tac<ApplyAst>(P(U"apply conj_comm.")).arg.name, "conj_comm");
  EXPECT_EQ(Tac<ApplyAst>(P(U"apply conj_comm.")).arg.token, 1u);
  EXPECT_EQ(Tac<ExactAst>(P(U"exact H.")).arg.name, "H");
  EXPECT_EQ(Tac<ElimAst>(P(U"elim H.")).arg.name, "H");
  P(U"assumption.");
  P(U"split.");
  P(U"left.");
  P(U"right.");
}

TEST(ParserTest, AutoForms) {
  const AutoAst plain = Tac<AutoAst>(P(U"auto."));
  EXPECT_FALSE(plain.user.lemmas);
  EXPECT_FALSE(plain.user.depth);
  EXPECT_FALSE(plain.trace);
  const AutoAst user = Tac<AutoAst>(P(U"auto using a, b depth 4."));
  ASSERT_TRUE(user.user.lemmas);
  EXPECT_EQ(user.user.lemmas->size(), 2u);
  EXPECT_EQ(*user.user.depth, 4);
  const AutoAst traced = Tac<AutoAst>(P(U"auto<T> using x depth 2</T>."));
  ASSERT_TRUE(traced.trace);
  EXPECT_EQ(traced.trace->lemmas->at(0).name, "x");
  EXPECT_EQ(*traced.trace->depth, 2);
  EXPECT_FALSE(traced.user.lemmas);
  EXPECT_EQ(Tac<AutoAst>(P(U"auto<T> depth 1</T>.")).trace->depth, 1);
}

void ExpectParseError(std::u32string_view text, std::string_view fragment) {
  const NotationTable t = NotationTable::Builtin();
  const LexedText l = Lex(text, t);
  try {
    ParseStatement(l, t, 0);
    FAIL() << "no error for " << EncodeUtf8(text);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ParserTest, Errors) {
  ExpectParseError(U"theorem t : a → a", "missing statement terminator");
  ExpectParseError(U"intro", "missing statement terminator");
  ExpectParseError(U"theorem : a.", "");
  ExpectParseError(U"theorem t : a ∧.", "");
  ExpectParseError(U"theorem t : (a.", "");
  ExpectParseError(U"frobnicate.", "");
  ExpectParseError(U"auto depth 0.", "");
  ExpectParseError(U"auto<T> using x</T>.", "");
  ExpectParseError(U"intro H K.", "");
}

TEST(ParserTest, ConsecutiveStatements) {
  const NotationTable t = NotationTable::Builtin();
  const Text src = U"(* c *) theorem t : a → a. intro H. exact H. qed.";
  const LexedText l = Lex(src, t);
  std::size_t from = 0;
  std::vector<Span> consumed;
  while (from < l.tokens.size()) {
    auto [st, next] = ParseStatement(l, t, from);
    consumed.push_back(st.consumed);
    from = next;
  }
  ASSERT_EQ(consumed.size(), 4u);
  EXPECT_EQ(consumed[0].start, 0u);
  for (std::size_t i = 1; i < consumed.size(); ++i) {
    EXPECT_EQ(consumed[i].start, consumed[i - 1].end);
  }
  EXPECT_EQ(consumed.back().end, src.size());
}

TEST(ParserTest, OverloadedSymbolBecomesSymbolUse) {
  const NotationTable t = NotationTable::Builtin()
      .Register({Fixity::kInfixr, "&", "or", 20})
      .Register({Fixity::kInfixr, "&", "and", 30});
  const FormulaAst f = As<TheoremDecl>(P(U"theorem t : a & b.", t)).formula;
  EXPECT_EQ(f.kind, FormulaAst::Kind::kSymbolUse);
  EXPECT_EQ(f.candidates,
            (std::vector<Connective>{Connective::kOr, Connective::kAnd}));
  EXPECT_THROW(FormulaFromAst(f), ParseError);
}

TEST(ParserTest, PrecedenceAndAssociativity) {
  EXPECT_EQ(F("a ∨ b ∧ c"), F("a ∨ (b ∧ c)"));
  EXPECT_EQ(F("¬a ∧ b"), F("(¬a) ∧ b"));
  EXPECT_EQ(F("a ∧ b ∧ c"), F("a ∧ (b ∧ c)"));
  EXPECT_EQ(F("a ∨ b → c ∨ d"), F("(a ∨ b) → (c ∨ d)"));
}

}  // namespace
}  // namespace webprover
