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

#include <algorithm>
#include <string>
#include <utility>

namespace webprover {
namespace {

struct Insertion {
  std::size_t offset;  // relative to the raw slice
  Text text;
  int order;  // ties: opening tags after closing ones
};

Text HyperlinkOpen(const LibUri& uri) {
  return ToText("<A href=\"" + uri.str() + "\">");
}

Text TraceBlock(const AutoTrace& trace) {
  std::string out = "<T>";
  if (!trace.lemmas.empty()) {
    out += " using ";
    for (std::size_t i = 0; i < trace.lemmas.size(); ++i) {
      if (i > 0) out += ", ";
      const LibUri& u = trace.lemmas[i];
      out += "<A href=\"" + u.str() + "\">" + u.name() + "</A>";
    }
  }
  out += " depth " + std::to_string(trace.depth) + "</T>";
  return ToText(out);
}

}  // namespace

EnrichedStatement Enrich(const StatementAst& st, const LexedText& lexed,
                         const Resolution& res,
                         const std::optional<AutoTrace>& trace) {
  const std::size_t base = st.consumed.start;
  std::vector<Insertion> ins;
  for (const auto& [index, uri] : res) {
    if (index >= lexed.tokens.size()) {
      throw EnrichError("resolution names a token outside the statement");
    }
    const Token& tok = lexed.tokens[index];
    if (tok.span.start < st.consumed.start || tok.span.end > st.consumed.end ||
        (tok.kind != TokenKind::kIdent && tok.kind != TokenKind::kSymbol)) {
      throw EnrichError("resolution names a token without a lexeme");
    }
    auto link = lexed.links.find(index);
    if (link != lexed.links.end()) continue;  // already wrapped
    ins.push_back({tok.span.start - base, HyperlinkOpen(uri), 1});
    ins.push_back({tok.span.end - base, ToText("</A>"), 0});
  }
  if (trace) {
    const auto* tac = std::get_if<TacticStmt>(&st.body);
    const auto* aut = tac ? std::get_if<AutoAst>(&tac->tactic) : nullptr;
    if (aut == nullptr) throw EnrichError("trace given for a non-auto statement");
    if (!aut->trace) {
      ins.push_back({lexed.tokens.at(aut->auto_token).span.end - base,
                     TraceBlock(*trace), 2});
    }
  }
  // Right to left so the offsets of earlier insertions stay valid.
  std::stable_sort(ins.begin(), ins.end(),
                   [](const Insertion& a, const Insertion& b) {
                     if (a.offset != b.offset) return a.offset > b.offset;
                     return a.order > b.order;
                   });
  EnrichedStatement out;
  out.text = st.raw;
  for (const Insertion& i : ins) out.text.insert(i.offset, i.text);
  out.original = st.consumed;
  out.enriched_length = out.text.size();
  return out;
}

Text Strip(TextView text) {
  Text out;
  out.reserve(text.size());
  std::vector<std::pair<char32_t, std::size_t>> open;  // tag letter, offset
  std::size_t i = 0;
  auto starts = [&](std::u32string_view s) {
    return text.substr(i, s.size()) == s;
  };
  while (i < text.size()) {
    if (starts(U"(*")) {
      const std::size_t start = i;
      int depth = 0;
      do {
        if (starts(U"(*")) {
          ++depth;
          i += 2;
        } else if (starts(U"*)")) {
          --depth;
          i += 2;
        } else if (i >= text.size()) {
          throw StripError("unterminated comment", start);
        } else {
          ++i;
        }
      } while (depth > 0);
      out.append(text.substr(start, i - start));
    } else if (text[i] == U'"') {
      const std::size_t end = text.find(U'"', i + 1);
      if (end == TextView::npos) throw StripError("unterminated string", i);
      out.append(text.substr(i, end + 1 - i));
      i = end + 1;
    } else if (starts(U"<A href=\"")) {
      const std::size_t close = text.find(U"\">", i);
      if (close == TextView::npos) throw StripError("malformed hyperlink tag", i);
      open.emplace_back(U'A', i);
      i = close + 2;
    } else if (starts(U"<T>")) {
      open.emplace_back(U'T', i);
      i += 3;
    } else if (starts(U"</A>") || starts(U"</T>")) {
      const char32_t tag = text[i + 2];
      if (open.empty() || open.back().first != tag) {
        throw StripError("unbalanced closing tag", i);
      }
      open.pop_back();
      i += 4;
    } else if (text[i] == U'<') {
      throw StripError("unknown tag", i);
    } else {
      out.push_back(text[i++]);
    }
  }
  if (!open.empty()) throw StripError("unclosed tag", open.back().second);
  return out;
}

}  // namespace webprover
