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

#include <charconv>

namespace webprover {
namespace {

class Parser {
 public:
  Parser(const LexedText& lexed, const NotationTable& table, std::size_t from)
      : lexed_(lexed), table_(table), pos_(from) {}

  std::pair<StatementAst, std::size_t> Statement(std::size_t from) {
    StatementAst st;
    const Token* head = Next();
    if (head == nullptr) {
      throw ParseError("no statement to parse", EndSpan());
    }
    st.first_token = head->index;
    if (head->kind != TokenKind::kKeyword) {
      throw ParseError("unknown statement head '" + head->lexeme + "'",
                       head->span);
    }
    const std::string& kw = head->lexeme;
    if (kw == "theorem" || kw == "axiom") {
      NameRef name = ExpectName("a name");
      ExpectSymbol(":");
      FormulaAst f = Expr(0);
      if (kw == "theorem") {
        st.body = TheoremDecl{std::move(name), std::move(f)};
      } else {
        st.body = AxiomDecl{std::move(name), std::move(f)};
      }
    } else if (kw == "definition") {
      NameRef name = ExpectName("a name");
      ExpectSymbol(":=");
      st.body = DefinitionDecl{std::move(name), Expr(0)};
    } else if (kw == "notation") {
      st.body = Notation();
    } else if (kw == "qed") {
      st.body = QedStmt{};
    } else {
      st.body = TacticStmt{Tactic(*head)};
    }

    const Token* dot = Next();
    if (dot == nullptr) {
      throw ParseError("missing statement terminator", LastSpan());
    }
    if (dot->kind != TokenKind::kDot) {
      throw ParseError("expected '.' but found '" + dot->lexeme + "'",
                       dot->span);
    }
    st.dot_token = dot->index;
    CheckTraces(st);

    const std::size_t consumed_start =
        from == 0 ? lexed_.begin : lexed_.tokens[from - 1].span.end;
    st.consumed = Span{consumed_start, dot->span.end};
    st.core = Span{head->span.start, dot->span.end};
    st.raw = Text(lexed_.text.substr(consumed_start,
                                     dot->span.end - consumed_start));
    return {std::move(st), dot->index + 1};
  }

  FormulaAst WholeFormula() {
    FormulaAst f = Expr(0);
    if (const Token* t = Peek()) {
      throw ParseError("unexpected '" + t->lexeme + "' after formula", t->span);
    }
    return f;
  }

 private:
  const Token* Peek() {
    while (pos_ < lexed_.tokens.size() &&
           lexed_.tokens[pos_].kind == TokenKind::kComment) {
      ++pos_;
    }
    return pos_ < lexed_.tokens.size() ? &lexed_.tokens[pos_] : nullptr;
  }

  const Token* Next() {
    const Token* t = Peek();
    if (t != nullptr) {
      last_ = t;
      ++pos_;
    }
    return t;
  }

  Span EndSpan() const { return Span{lexed_.end, lexed_.end}; }
  Span LastSpan() const { return last_ ? last_->span : EndSpan(); }

  const Token& Expect(const char* what) {
    const Token* t = Next();
    if (t == nullptr) {
      throw ParseError(std::string("expected ") + what + " but input ended",
                       EndSpan());
    }
    return *t;
  }

  NameRef ExpectName(const char* what) {
    const Token& t = Expect(what);
    if (t.kind != TokenKind::kIdent) {
      throw ParseError(std::string("expected ") + what + " but found '" +
                           t.lexeme + "'",
                       t.span);
    }
    return NameRef{t.lexeme, t.index};
  }

  void ExpectSymbol(std::string_view sym) {
    const Token& t = Expect("a symbol");
    if (t.kind != TokenKind::kSymbol || t.lexeme != sym) {
      throw ParseError("expected '" + std::string(sym) + "' but found '" +
                           t.lexeme + "'",
                       t.span);
    }
  }

  void ExpectKeyword(std::string_view kw) {
    const Token& t = Expect("a keyword");
    if (t.kind != TokenKind::kKeyword || t.lexeme != kw) {
      throw ParseError("expected '" + std::string(kw) + "' but found '" +
                           t.lexeme + "'",
                       t.span);
    }
  }

  int ExpectNumber() {
    const Token& t = Expect("a number");
    int value = 0;
    if (t.kind != TokenKind::kNumber) {
      throw ParseError("expected a number but found '" + t.lexeme + "'",
                       t.span);
    }
    auto [ptr, ec] = std::from_chars(t.lexeme.data(),
                                     t.lexeme.data() + t.lexeme.size(), value);
    if (ec != std::errc() || value > 1000000) {
      throw ParseError("number out of range", t.span);
    }
    return value;
  }

  static std::vector<Connective> Interpretations(
      const std::vector<NotationEntry>& entries, bool prefix,
      const NotationEntry** first) {
    std::vector<Connective> out;
    *first = nullptr;
    for (const NotationEntry& e : entries) {
      if ((e.fixity == Fixity::kPrefix) != prefix) continue;
      if (*first == nullptr) *first = &e;
      out.push_back(e.connective);
    }
    return out;
  }

  static FormulaAst Operator(const Token& t, std::vector<Connective> conns,
                             std::vector<FormulaAst> children) {
    FormulaAst node;
    node.text = t.lexeme;
    node.token = t.index;
    node.children = std::move(children);
    if (conns.size() >= 2) {
      node.kind = FormulaAst::Kind::kSymbolUse;
      node.candidates = std::move(conns);
    } else {
      node.kind = FormulaAst::Kind::kConnective;
      node.connective = conns.front();
    }
    return node;
  }

  FormulaAst Expr(int min_priority) {
    FormulaAst lhs = Primary();
    while (true) {
      const Token* t = Peek();
      if (t == nullptr || t->kind != TokenKind::kSymbol) break;
      const auto* entries = table_.Find(t->lexeme);
      if (entries == nullptr) break;
      const NotationEntry* head = nullptr;
      std::vector<Connective> conns = Interpretations(*entries, false, &head);
      if (head == nullptr || head->priority < min_priority) break;
      const Token& op = *Next();
      const int next_min = head->fixity == Fixity::kInfixr ? head->priority
                                                           : head->priority + 1;
      FormulaAst rhs = Expr(next_min);
      std::vector<FormulaAst> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(std::move(rhs));
      lhs = Operator(op, std::move(conns), std::move(kids));
    }
    return lhs;
  }

  FormulaAst Primary() {
    const Token& t = Expect("a formula");
    if (t.kind == TokenKind::kIdent) {
      FormulaAst leaf;
      leaf.token = t.index;
      leaf.text = t.lexeme;
      if (t.lexeme == "False" || t.lexeme == "True") {
        leaf.kind = FormulaAst::Kind::kConstant;
        leaf.constant = t.lexeme == "False" ? Formula::Bot() : Formula::Top();
      } else {
        leaf.kind = FormulaAst::Kind::kIdent;
      }
      return leaf;
    }
    if (t.kind == TokenKind::kSymbol) {
      if (t.lexeme == "(") {
        FormulaAst inner = Expr(0);
        ExpectSymbol(")");
        return inner;
      }
      if (auto c = table_.Constant(t.lexeme)) {
        FormulaAst leaf;
        leaf.kind = FormulaAst::Kind::kConstant;
        leaf.token = t.index;
        leaf.text = t.lexeme;
        leaf.constant = *c;
        return leaf;
      }
      if (const auto* entries = table_.Find(t.lexeme)) {
        const NotationEntry* head = nullptr;
        std::vector<Connective> conns = Interpretations(*entries, true, &head);
        if (head != nullptr) {
          std::vector<FormulaAst> kids;
          kids.push_back(Expr(head->priority));
          return Operator(t, std::move(conns), std::move(kids));
        }
      }
    }
    throw ParseError("unexpected '" + t.lexeme + "' in formula", t.span);
  }

  NotationStmt Notation() {
    const Token& fix = Expect("a fixity");
    NotationDecl decl{};
    if (fix.lexeme == "infixl") {
      decl.fixity = Fixity::kInfixl;
    } else if (fix.lexeme == "infixr") {
      decl.fixity = Fixity::kInfixr;
    } else if (fix.lexeme == "prefix") {
      decl.fixity = Fixity::kPrefix;
    } else {
      throw ParseError("expected infixl, infixr or prefix", fix.span);
    }
    const Token& sym = Expect("a quoted symbol");
    if (sym.kind != TokenKind::kString) {
      throw ParseError("expected a quoted symbol", sym.span);
    }
    decl.symbol = sym.lexeme.substr(1, sym.lexeme.size() - 2);
    ExpectKeyword("for");
    decl.connective = ExpectName("a connective name").name;
    ExpectKeyword("priority");
    decl.priority = ExpectNumber();
    return NotationStmt{std::move(decl)};
  }

  TacticAst Tactic(const Token& head) {
    const std::string& kw = head.lexeme;
    if (kw == "intro") {
      IntroAst intro;
      const Token* t = Peek();
      if (t != nullptr && t->kind == TokenKind::kIdent) {
        intro.name = NameRef{t->lexeme, t->index};
        Next();
      }
      return intro;
    }
    if (kw == "apply") return ApplyAst{ExpectName("a lemma or hypothesis")};
    if (kw == "exact") return ExactAst{ExpectName("a lemma or hypothesis")};
    if (kw == "elim") return ElimAst{ExpectName("a hypothesis")};
    if (kw == "assumption") return AssumptionAst{};
    if (kw == "split") return SplitAst{};
    if (kw == "left") return LeftAst{};
    if (kw == "right") return RightAst{};
    if (kw == "auto") return Auto(head);
    throw ParseError("unknown statement head '" + kw + "'", head.span);
  }

  AutoAst Auto(const Token& head) {
    AutoAst ast;
    ast.auto_token = head.index;
    while (true) {
      const Token* t = Peek();
      if (t == nullptr || t->kind != TokenKind::kKeyword ||
          (t->lexeme != "using" && t->lexeme != "depth")) {
        break;
      }
      const Token& kw = *Next();
      const bool traced = lexed_.InTrace(kw.index);
      if (traced && !ast.trace) ast.trace = AutoArgs{};
      AutoArgs& args = traced ? *ast.trace : ast.user;
      auto same_side = [&](const Token& tok) {
        if (lexed_.InTrace(tok.index) != traced) {
          throw ParseError("trace markup must wrap whole auto arguments",
                           tok.span);
        }
      };
      if (kw.lexeme == "using") {
        if (args.lemmas) throw ParseError("duplicate 'using' clause", kw.span);
        std::vector<NameRef> lemmas;
        while (true) {
          NameRef name = ExpectName("a lemma name");
          same_side(lexed_.tokens[name.token]);
          lemmas.push_back(std::move(name));
          const Token* comma = Peek();
          if (comma == nullptr || comma->kind != TokenKind::kSymbol ||
              comma->lexeme != ",") {
            break;
          }
          same_side(*comma);
          Next();
        }
        args.lemmas = std::move(lemmas);
      } else {
        if (args.depth) throw ParseError("duplicate 'depth' clause", kw.span);
        const int depth = ExpectNumber();
        same_side(*last_);
        if (depth < 1) throw ParseError("auto depth must be at least 1", last_->span);
        args.depth = depth;
      }
    }
    if (ast.trace && !ast.trace->depth) {
      throw ParseError("automation trace lacks a depth", head.span);
    }
    return ast;
  }

  void CheckTraces(const StatementAst& st) const {
    const auto* tactic = std::get_if<TacticStmt>(&st.body);
    const bool is_auto =
        tactic != nullptr && std::holds_alternative<AutoAst>(tactic->tactic);
    for (const TraceRegion& r : lexed_.traces) {
      if (r.last < st.first_token || r.first > st.dot_token) continue;
      if (!is_auto || r.first <= st.first_token) {
        throw ParseError("trace markup is only allowed around auto arguments",
                         lexed_.tokens[r.first].span);
      }
    }
  }

  const LexedText& lexed_;
  const NotationTable& table_;
  std::size_t pos_;
  const Token* last_ = nullptr;
};

}  // namespace

std::pair<StatementAst, std::size_t> ParseStatement(const LexedText& lexed,
                                                    const NotationTable& table,
                                                    std::size_t from) {
  return Parser(lexed, table, from).Statement(from);
}

FormulaAst ParseFormula(const LexedText& lexed, const NotationTable& table) {
  return Parser(lexed, table, 0).WholeFormula();
}

Formula FormulaFromAst(const FormulaAst& ast) {
  switch (ast.kind) {
    case FormulaAst::Kind::kIdent:
      return Formula::Atom(ast.text);
    case FormulaAst::Kind::kConstant:
      return ast.constant;
    case FormulaAst::Kind::kSymbolUse:
      throw ParseError("overloaded symbol '" + ast.text + "' needs resolution",
                       Span{});
    case FormulaAst::Kind::kConnective:
      break;
  }
  switch (ast.connective) {
    case Connective::kNot:
      return Formula::Not(FormulaFromAst(ast.children.at(0)));
    case Connective::kAnd:
      return Formula::And(FormulaFromAst(ast.children.at(0)),
                          FormulaFromAst(ast.children.at(1)));
    case Connective::kOr:
      return Formula::Or(FormulaFromAst(ast.children.at(0)),
                         FormulaFromAst(ast.children.at(1)));
    case Connective::kImp:
      return Formula::Imp(FormulaFromAst(ast.children.at(0)),
                          FormulaFromAst(ast.children.at(1)));
  }
  throw ParseError("unknown connective", Span{});
}

}  // namespace webprover
