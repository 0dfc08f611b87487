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
#include "webprover/enricher.h"

#include <gtest/gtest.h>

#include "support/test_util.h"

namespace webprover {
namespace {

const LibUri kComm = LibUri::Library("shared", "logic", "conj_comm");
const LibUri kCc = LibUri::Library("shared", "logic", "cc");

EnrichedStatement EnrichText(std::u32string_view text, const Resolution& res,
                      const std::optional<AutoTrace>& trace = std::nullopt,
                      std::size_t begin = 0) {
  const NotationTable t = NotationTable::Builtin();
  const LexedText l = Lex(text, t, begin, LexOptions{.stop_after_dot = true});
  const StatementAst st = ParseStatement(l, t, 0).first;
  return Enrich(st, l, res, trace);
}

TEST(EnricherTest, WrapsResolvedTokens) {
  const EnrichedStatement e = EnrichText(U"apply conj_comm.", {{1, kComm}});
  EXPECT_EQ(e.text,
            U"apply <A href=\"lib://shared/logic#conj_comm\">conj_comm</A>.");
  EXPECT_EQ(e.original, (Span{0, 16}));
  EXPECT_EQ(e.enriched_length, e.text.size());
}

TEST(EnricherTest, InsertsTraceAfterAuto) {
  const EnrichedStatement e = EnrichText(U"auto.", {}, AutoTrace{{kCc}, 2});
  EXPECT_EQ(e.text,
            U"auto<T> using <A href=\"lib://shared/logic#cc\">cc</A> depth 2</T>.");
  EXPECT_EQ(EnrichText(U"auto.", {}, AutoTrace{{}, 1}).text, U"auto<T> depth 1</T>.");
  EXPECT_EQ(EnrichText(U"auto.", {}, AutoTrace{{kCc, kComm}, 3}).text,
            U"auto<T> using <A href=\"lib://shared/logic#cc\">cc</A>, "
            U"<A href=\"lib://shared/logic#conj_comm\">conj_comm</A> depth 3</T>.");
}

TEST(EnricherTest, PreservesWhitespaceAndComments) {
  const EnrichedStatement e =
      EnrichText(U"\n  (* <b>x</b> *) apply   conj_comm  .", {{2, kComm}});
  EXPECT_EQ(e.text,
            U"\n  (* <b>x</b> *) apply   "
            U"<A href=\"lib://shared/logic#conj_comm\">conj_comm</A>  .");
  EXPECT_EQ(Strip(e.text), U"\n  (* <b>x</b> *) apply   conj_comm  .");
}

TEST(EnricherTest, Idempotent) {
  const Text once = EnrichText(U"apply conj_comm.", {{1, kComm}}).text;
  EXPECT_EQ(EnrichText(once, {{1, kComm}}).text, once);
  const Text traced = EnrichText(U"auto.", {}, AutoTrace{{kCc}, 2}).text;
  // A traced auto is not given a second trace; its lemmas keep their links.
  EXPECT_EQ(EnrichText(traced, {{2, kCc}}).text, traced);
}

TEST(EnricherTest, OffsetsFollowTheSubmittedText) {
  const Text src = U"intro. apply conj_comm.";
  const EnrichedStatement e = EnrichText(src, {{1, kComm}}, std::nullopt, 6);
  EXPECT_EQ(e.original, (Span{6, 23}));
  EXPECT_EQ(e.text,
            U" apply <A href=\"lib://shared/logic#conj_comm\">conj_comm</A>.");
}

TEST(EnricherTest, FormulaSymbols) {
  const LibUri kAnd = LibUri::Builtin(Connective::kAnd);
  EXPECT_EQ(EnrichText(U"theorem t : a ∧ b.", {{4, kAnd}}).text,
            U"theorem t : a <A href=\"builtin://logic#and\">∧</A> b.");
}

TEST(EnricherTest, BadResolutionIsAnInternalError) {
  EXPECT_THROW(EnrichText(U"apply conj_comm.", {{7, kComm}}), EnrichError);
  EXPECT_THROW(EnrichText(U"apply conj_comm.", {{2, kComm}}), EnrichError);
}

TEST(StripTest, RemovesMarkup) {
  EXPECT_EQ(Strip(U"auto<T> using <A href=\"lib://shared/l#x\">x</A> depth 2</T>."),
            U"auto using x depth 2.");
  EXPECT_EQ(Strip(U"(* <A href=\"x\"> *) \"<T>\" a"), U"(* <A href=\"x\"> *) \"<T>\" a");
  EXPECT_THROW(Strip(U"a < b"), StripError);
}

void ExpectStripError(std::u32string_view text, std::size_t offset) {
  try {
    Strip(text);
    FAIL() << "no error";
  } catch (const StripError& e) {
    EXPECT_EQ(e.offset(), offset) << e.what();
  }
}

TEST(StripTest, Errors) {
  ExpectStripError(U"ab</A>", 2);
  ExpectStripError(U"x <T> y", 2);
  ExpectStripError(U"<T><A href=\"u\">x</T></A>", 16);
  ExpectStripError(U"<B>", 0);
  ExpectStripError(U"<A href=\"u", 0);
}

TEST(StripTest, RoundTripOnEnrichedStatements) {
  for (const char32_t* s : {U"apply conj_comm.", U"exact  conj_comm ."}) {
    const NotationTable t = NotationTable::Builtin();
    const LexedText l = Lex(s, t);
    const EnrichedStatement e = EnrichText(s, {{1, kComm}});
    EXPECT_EQ(Strip(e.text), Text(s));
    const LexedText again = Lex(e.text, t);
    ASSERT_EQ(again.tokens.size(), l.tokens.size());
    for (std::size_t i = 0; i < l.tokens.size(); ++i) {
      EXPECT_EQ(again.tokens[i].lexeme, l.tokens[i].lexeme);
      EXPECT_EQ(again.tokens[i].kind, l.tokens[i].kind);
    }
  }
}

}  // namespace
}  // namespace webprover
