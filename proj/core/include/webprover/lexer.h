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
#ifndef WEBPROVER_LEXER_H_
#define WEBPROVER_LEXER_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "webprover/lib_uri.h"
#include "webprover/notation.h"
#include "webprover/text.h"

namespace webprover {

// Half-open range of scalar offsets into the submitted text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - start; }
  bool operator==(const Span&) const = default;
};

enum class TokenKind { kIdent, kKeyword, kSymbol, kNumber, kString, kDot,
                       kComment };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;  // UTF-8; comments and strings verbatim
  Span span;
  std::size_t index;   // ordinal in the stream

  bool operator==(const Token&) const = default;
};

// Hyperlink hints by stream index. Keys are always ident or symbol tokens.
using LinkTable = std::map<std::size_t, LibUri>;

// Inclusive range of stream indices that sat inside <T>...</T>.
struct TraceRegion {
  std::size_t first;
  std::size_t last;
  bool contains(std::size_t index) const {
    return first <= index && index <= last;
  }
  bool operator==(const TraceRegion&) const = default;
};

struct LexedText {
  TextView text;          // the whole submitted text; not owned
  std::size_t begin = 0;  // where lexing started
  std::size_t end = 0;    // where lexing stopped
  std::vector<Token> tokens;
  LinkTable links;
  std::vector<TraceRegion> traces;

  bool InTrace(std::size_t index) const;
  // True when only comments were found.
  bool Blank() const;
};

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, Span span)
      : std::runtime_error(message), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

struct LexOptions {
  // Stop right after the first statement terminator.
  bool stop_after_dot = false;
};

bool IsKeyword(std::string_view word);

// Tokenizes text[begin..), erasing markup into the link and trace tables.
//
// Markup is recognized only in executable text:
//   <A href="URI">leaf</A>   hyperlink hint around one ident or symbol
//   <T>...</T>               automation trace
// Inside (* comments *) everything is kept verbatim.
LexedText Lex(TextView text, const NotationTable& table,
              std::size_t begin = 0, LexOptions options = {});

}  // namespace webprover

#endif  // WEBPROVER_LEXER_H_
