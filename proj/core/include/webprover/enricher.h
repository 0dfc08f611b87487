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
#ifndef WEBPROVER_ENRICHER_H_
#define WEBPROVER_ENRICHER_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "webprover/disambiguator.h"
#include "webprover/lexer.h"
#include "webprover/parser.h"
#include "webprover/proof_state.h"
#include "webprover/text.h"

namespace webprover {

struct EnrichedStatement {
  Text text;
  Span original;  // in the submitted text
  std::size_t enriched_length = 0;
  bool operator==(const EnrichedStatement&) const = default;
};

class EnrichError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Inserts hyperlinks for every entry of res and, when trace is set, a
// <T> using ... depth k</T> block right after the auto keyword.
//
// st and lexed are the parse of the statement; token spans are absolute in
// lexed.text and st.consumed locates st.raw there.
EnrichedStatement Enrich(const StatementAst& st, const LexedText& lexed,
                         const Resolution& res,
                         const std::optional<AutoTrace>& trace);

class StripError : public std::runtime_error {
 public:
  StripError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Removes <A href="..."> </A> <T> </T> outside comments and strings.
Text Strip(TextView text);

}  // namespace webprover

#endif  // WEBPROVER_ENRICHER_H_
