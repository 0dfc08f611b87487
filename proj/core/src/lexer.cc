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
#include "webprover/lexer.h"

#include <algorithm>
#include <array>
#include <optional>

namespace webprover {
namespace {

constexpr std::array<std::string_view, 21> kKeywords = {
    "theorem", "axiom",  "definition", "notation", "qed",    "intro",
    "apply",   "exact",  "assumption", "split",    "left",   "right",
    "elim",    "auto",   "using",      "depth",    "for",    "priority",
    "infixl",  "infixr", "prefix"};

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}

bool IsAsciiAlpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool IsIdentStart(char32_t c) { return IsAsciiAlpha(c) || c == U'_'; }

bool IsIdentChar(char32_t c) {
  return IsIdentStart(c) || IsDigit(c) || c == U'\'';
}

bool StartsWith(TextView text, std::size_t pos, TextView prefix) {
  return text.size() - pos >= prefix.size() &&
         text.compare(pos, prefix.size(), prefix) == 0;
}

class Lexer {
 public:
  Lexer(TextView text, const NotationTable& table, std::size_t begin,
        LexOptions options)
      : text_(text), pos_(begin), options_(options) {
    out_.text = text;
    out_.begin = begin;
    for (const std::string& s : table.LexerSymbols()) {
      symbols_.push_back(DecodeUtf8(s));
    }
  }

  LexedText Run() {
    while (pos_ < text_.size()) {
      const char32_t c = text_[pos_];
      if (IsSpace(c)) {
        ++pos_;
      } else if (StartsWith(text_, pos_, U"(*")) {
        LexComment();
      } else if (c == U'<') {
        LexTag();
      } else if (c == U'"') {
        LexString();
      } else if (IsDigit(c)) {
        LexWhile(TokenKind::kNumber, IsDigit);
      } else if (IsIdentStart(c)) {
        const std::size_t idx = LexWhile(TokenKind::kIdent, IsIdentChar);
        if (IsKeyword(out_.tokens[idx].lexeme)) {
          out_.tokens[idx].kind = TokenKind::kKeyword;
        }
      } else if (c == U'.') {
        if (link_ || trace_) {
          throw LexError("markup region crosses a statement terminator",
                         {pos_, pos_ + 1});
        }
        Emit(TokenKind::kDot, pos_, pos_ + 1);
        ++pos_;
        if (options_.stop_after_dot) break;
      } else {
        LexSymbol();
      }
    }
    if (link_) {
      throw LexError("unterminated hyperlink markup",
                     {link_->tag_start, link_->tag_end});
    }
    if (trace_) {
      throw LexError("unterminated trace markup",
                     {trace_->tag_start, trace_->tag_end});
    }
    out_.end = pos_;
    return std::move(out_);
  }

 private:
  struct OpenTag {
    std::size_t tag_start;
    std::size_t tag_end;
    std::size_t first_token;
    LibUri uri;
  };

  std::size_t Emit(TokenKind kind, std::size_t start, std::size_t end) {
    const std::size_t index = out_.tokens.size();
    out_.tokens.push_back(Token{kind, EncodeUtf8(text_.substr(start, end - start)),
                                Span{start, end}, index});
    return index;
  }

  template <typename Pred>
  std::size_t LexWhile(TokenKind kind, Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return Emit(kind, start, pos_);
  }

  void LexComment() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      if (StartsWith(text_, pos_, U"(*")) {
        ++depth;
        pos_ += 2;
      } else if (StartsWith(text_, pos_, U"*)")) {
        --depth;
        pos_ += 2;
        if (depth == 0) {
          Emit(TokenKind::kComment, start, pos_);
          return;
        }
      } else {
        ++pos_;
      }
    }
    throw LexError("unterminated comment", {start, text_.size()});
  }

  void LexString() {
    const std::size_t start = pos_++;
    while (pos_ < text_.size() && text_[pos_] != U'"' && text_[pos_] != U'\n') {
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] != U'"') {
      throw LexError("unterminated string literal", {start, pos_});
    }
    ++pos_;
    Emit(TokenKind::kString, start, pos_);
  }

  void LexSymbol() {
    for (const Text& sym : symbols_) {
      if (StartsWith(text_, pos_, sym)) {
        Emit(TokenKind::kSymbol, pos_, pos_ + sym.size());
        pos_ += sym.size();
        return;
      }
    }
    throw LexError("unexpected character '" + EncodeUtf8(text_[pos_]) + "'",
                   {pos_, pos_ + 1});
  }

  // Returns the offset one past '>' of a tag starting at pos_, or throws.
  std::size_t TagEnd(std::size_t from) const {
    for (std::size_t i = from; i < text_.size(); ++i) {
      if (text_[i] == U'>') return i + 1;
      if (text_[i] == U'\n' || text_[i] == U'<') break;
    }
    throw LexError("unterminated markup tag", {pos_, from});
  }

  void LexTag() {
    const std::size_t start = pos_;
    if (StartsWith(text_, pos_, U"<A href=\"")) {
      const std::size_t uri_start = pos_ + 9;
      std::size_t quote = uri_start;
      while (quote < text_.size() && text_[quote] != U'"' &&
             text_[quote] != U'\n' && text_[quote] != U'>') {
        ++quote;
      }
      if (quote >= text_.size() || text_[quote] != U'"' ||
          quote + 1 >= text_.size() || text_[quote + 1] != U'>') {
        TagEnd(quote);
        throw LexError("malformed hyperlink tag", {start, quote});
      }
      const std::size_t end = quote + 2;
      const std::string uri_text =
          EncodeUtf8(text_.substr(uri_start, quote - uri_start));
      auto uri = LibUri::Parse(uri_text);
      if (!uri) throw LexError("ill-formed uri '" + uri_text + "'", {start, end});
      if (link_) throw LexError("hyperlinks may not nest", {start, end});
      link_ = OpenTag{start, end, out_.tokens.size(), std::move(*uri)};
      pos_ = end;
    } else if (StartsWith(text_, pos_, U"</A>")) {
      const Span tag{start, start + 4};
      if (!link_) throw LexError("</A> without matching <A>", tag);
      const std::size_t count = out_.tokens.size() - link_->first_token;
      const bool leaf =
          count == 1 && (out_.tokens.back().kind == TokenKind::kIdent ||
                         out_.tokens.back().kind == TokenKind::kSymbol);
      if (!leaf) {
        throw LexError(
            "a hyperlink must wrap exactly one identifier or symbol",
            {link_->tag_start, tag.end});
      }
      out_.links.emplace(link_->first_token, link_->uri);
      link_.reset();
      pos_ = tag.end;
    } else if (StartsWith(text_, pos_, U"<T>")) {
      const Span tag{start, start + 3};
      if (trace_) throw LexError("trace markup may not nest", tag);
      if (link_) throw LexError("trace markup inside a hyperlink", tag);
      trace_ = OpenTag{start, tag.end, out_.tokens.size(), {}};
      pos_ = tag.end;
    } else if (StartsWith(text_, pos_, U"</T>")) {
      const Span tag{start, start + 4};
      if (!trace_) throw LexError("</T> without matching <T>", tag);
      if (link_) throw LexError("hyperlink left open inside trace", tag);
      if (out_.tokens.size() > trace_->first_token) {
        out_.traces.push_back(
            TraceRegion{trace_->first_token, out_.tokens.size() - 1});
      }
      trace_.reset();
      pos_ = tag.end;
    } else {
      const std::size_t end = TagEnd(pos_ + 1);
      throw LexError("unknown markup tag", {start, end});
    }
  }

  TextView text_;
  std::size_t pos_;
  LexOptions options_;
  std::vector<Text> symbols_;
  LexedText out_;
  std::optional<OpenTag> link_;
  std::optional<OpenTag> trace_;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "ident";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kSymbol: return "symbol";
    case TokenKind::kNumber: return "number";
    case TokenKind::kString: return "string";
    case TokenKind::kDot: return "dot";
    case TokenKind::kComment: return "comment";
  }
  return "";
}

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool LexedText::InTrace(std::size_t index) const {
  return std::any_of(traces.begin(), traces.end(),
                     [index](const TraceRegion& r) { return r.contains(index); });
}

bool LexedText::Blank() const {
  return std::all_of(tokens.begin(), tokens.end(), [](const Token& t) {
    return t.kind == TokenKind::kComment;
  });
}

LexedText Lex(TextView text, const NotationTable& table, std::size_t begin,
              LexOptions options) {
  return Lexer(text, table, begin, options).Run();
}

}  // namespace webprover
