#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syad/dsl/ast.hpp"
#include "syad/dsl/lexer.hpp"
#include "syad/errors.hpp"

namespace syad::dsl {

// Recursive-descent parser for the statement grammar:
//
//   program    := { statement terminator }
//   statement  := universe | setdecl | reldecl | syaddecl | query
//   universe   := "universe" IDENT "=" "{" IDENT { "," IDENT } "}"
//   setdecl    := "set" IDENT "on" IDENT "=" singletons
//   singletons := NUMBER "/" IDENT { "+" NUMBER "/" IDENT }
//   reldecl    := "rel" IDENT "on" IDENT "x" IDENT "=" relentries
//   relentries := NUMBER "/" "(" IDENT "," IDENT ")" { "+" ... }
//   syaddecl   := "syadstate" IDENT "=" "asti" IDENT "," "avaktavya" IDENT
//                 "," "time" IDENT [ "," "at" IDENT ]
//   query      := "eval" expr
//               | "infer" RULEID ":" proposition ";" ( proposition | conditional )
//               | "syad" IDENT "given" IDENT
//   expr       := orexpr [ "implies" orexpr ]
//   orexpr     := andexpr { "or" andexpr }
//   andexpr    := compexpr { "o"-chain { "and" ... } }   (see unary levels)
//   proposition:= IDENT [ ("and"|"or") IDENT ] ("is"|"are") IDENT
//   conditional:= "if" proposition "then" proposition
//
// A terminator is `;` or end of line, so a statement never spans lines.

namespace detail {

class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Program parse_program() {
    Program program;
    while (pos_ < tokens_.size()) {
      line_ = tokens_[pos_].line;
      program.push_back(parse_statement());
      if (pos_ >= tokens_.size()) break;
      if (tokens_[pos_].line == line_) {
        if (is_symbol(tokens_[pos_], ";")) {
          ++pos_;
        } else {
          throw ParseError("expected ';' or end of line after statement",
                           tokens_[pos_].pos());
        }
      }
    }
    return program;
  }

private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  int line_ = 1;

  static bool is_symbol(const Token& t, std::string_view s) {
    return t.kind == TokenKind::Symbol && t.text == s;
  }

  static bool is_keyword(const Token& t, std::string_view s) {
    return t.kind == TokenKind::Keyword && t.text == s;
  }

  // Tokens past the current line belong to the next statement.
  const Token* peek() const {
    if (pos_ < tokens_.size() && tokens_[pos_].line == line_) return &tokens_[pos_];
    return nullptr;
  }

  SourcePos here() const {
    if (const Token* t = peek()) return t->pos();
    if (tokens_.empty()) return {1, 1};
    return tokens_[pos_ > 0 ? pos_ - 1 : 0].pos();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    if (const Token* t = peek()) {
      throw ParseError("expected " + expected + ", found '" + t->text + "'", t->pos());
    }
    throw ParseError("expected " + expected + " before end of statement", here());
  }

  std::string take_ident(const std::string& expected) {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Ident) fail(expected);
    ++pos_;
    return t->text;
  }

  void expect_symbol(std::string_view s) {
    const Token* t = peek();
    if (!t || !is_symbol(*t, s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view s) {
    const Token* t = peek();
    if (!t || !is_keyword(*t, s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }

  bool accept_symbol(std::string_view s) {
    const Token* t = peek();
    if (t && is_symbol(*t, s)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_keyword(std::string_view s) {
    const Token* t = peek();
    if (t && is_keyword(*t, s)) {
      ++pos_;
      return true;
    }
    return false;
  }

  NumberLit take_number() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Number) fail("a number");
    ++pos_;
    return {t->number, t->text, t->pos()};
  }

  Statement parse_statement() {
    const Token* t = peek();
    if (!t) fail("a statement");
    const SourcePos pos = t->pos();
    if (t->kind == TokenKind::Keyword) {
      if (t->text == "universe") return {parse_universe(), pos};
      if (t->text == "set") return {parse_setdecl(), pos};
      if (t->text == "rel") return {parse_reldecl(), pos};
      if (t->text == "syadstate") return {parse_syaddecl(), pos};
      if (t->text == "eval") return {parse_eval(), pos};
      if (t->text == "infer") return {parse_infer(), pos};
      if (t->text == "syad") return {parse_syadquery(), pos};
    }
    fail("a statement");
  }

  UniverseDecl parse_universe() {
    expect_keyword("universe");
    UniverseDecl decl;
    decl.name = take_ident("a universe name");
    expect_symbol("=");
    expect_symbol("{");
    decl.elements.push_back(take_ident("an element name"));
    while (accept_symbol(",")) decl.elements.push_back(take_ident("an element name"));
    expect_symbol("}");
    return decl;
  }

  SetDecl parse_setdecl() {
    expect_keyword("set");
    SetDecl decl;
    decl.name = take_ident("a set name");
    expect_keyword("on");
    decl.universe = take_ident("a universe name");
    expect_symbol("=");
    decl.singletons.push_back(parse_singleton());
    while (accept_symbol("+")) decl.singletons.push_back(parse_singleton());
    return decl;
  }

  Singleton parse_singleton() {
    Singleton s;
    s.grade = take_number();
    expect_symbol("/");
    s.element = take_ident("an element name");
    return s;
  }

  RelationDecl parse_reldecl() {
    expect_keyword("rel");
    RelationDecl decl;
    decl.name = take_ident("a relation name");
    expect_keyword("on");
    decl.domain = take_ident("a universe name");
    const Token* cross = peek();
    if (!cross || cross->kind != TokenKind::Ident || cross->text != "x") {
      fail("'x' between the two universes");
    }
    ++pos_;
    decl.codomain = take_ident("a universe name");
    expect_symbol("=");
    decl.entries.push_back(parse_rel_entry());
    while (accept_symbol("+")) decl.entries.push_back(parse_rel_entry());
    return decl;
  }

  RelEntry parse_rel_entry() {
    RelEntry e;
    e.grade = take_number();
    expect_symbol("/");
    expect_symbol("(");
    e.x = take_ident("an element name");
    expect_symbol(",");
    e.y = take_ident("an element name");
    expect_symbol(")");
    return e;
  }

  SyadDecl parse_syaddecl() {
    expect_keyword("syadstate");
    SyadDecl decl;
    decl.name = take_ident("a state name");
    expect_symbol("=");
    expect_keyword("asti");
    decl.asti = take_ident("a set name");
    expect_symbol(",");
    expect_keyword("avaktavya");
    decl.avaktavya = take_ident("a set name");
    expect_symbol(",");
    expect_keyword("time");
    decl.time_rel = take_ident("a relation name");
    if (accept_symbol(",")) {
      expect_keyword("at");
      decl.at_time = take_ident("a time point");
    }
    return decl;
  }

  EvalQuery parse_eval() {
    expect_keyword("eval");
    EvalQuery q;
    q.expr = parse_expr();
    return q;
  }

  InferQuery parse_infer() {
    expect_keyword("infer");
    InferQuery q;
    const Token* rule = peek();
    if (!rule || rule->kind != TokenKind::Ident || rule->text.size() != 2 ||
        rule->text[0] != 'R' || rule->text[1] < '1' || rule->text[1] > '5') {
      fail("a rule id R1..R5");
    }
    q.rule_id = rule->text;
    ++pos_;
    expect_symbol(":");
    q.premise = parse_proposition();
    expect_symbol(";");
    if (accept_keyword("if")) {
      CondSyntax cond;
      cond.antecedent = parse_proposition();
      expect_keyword("then");
      cond.consequent = parse_proposition();
      q.second = std::move(cond);
    } else {
      q.second = parse_proposition();
    }
    return q;
  }

  SyadQuery parse_syadquery() {
    expect_keyword("syad");
    SyadQuery q;
    q.element = take_ident("an element name");
    expect_keyword("given");
    q.state = take_ident("a state name");
    return q;
  }

  PropSyntax parse_proposition() {
    PropSyntax p;
    p.pos = here();
    p.subjects.push_back(take_ident("a subject variable"));
    if (accept_keyword("and")) {
      p.link = SubjectLink::And;
      p.subjects.push_back(take_ident("a subject variable"));
    } else if (accept_keyword("or")) {
      p.link = SubjectLink::Or;
      p.subjects.push_back(take_ident("a subject variable"));
    }
    if (!accept_keyword("is") && !accept_keyword("are")) fail("'is' or 'are'");
    p.set_name = take_ident("a set name");
    return p;
  }

  // expr := orexpr [ "implies" orexpr ]
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_orexpr();
    if (const Token* t = peek(); t && is_keyword(*t, "implies")) {
      const SourcePos pos = t->pos();
      ++pos_;
      ExprPtr rhs = parse_orexpr();
      return make_binary(ExprKind::Implies, std::move(lhs), std::move(rhs), pos);
    }
    return lhs;
  }

  ExprPtr parse_orexpr() {
    ExprPtr lhs = parse_andexpr();
    while (const Token* t = peek()) {
      if (!is_keyword(*t, "or")) break;
      const SourcePos pos = t->pos();
      ++pos_;
      lhs = make_binary(ExprKind::Or, std::move(lhs), parse_andexpr(), pos);
    }
    return lhs;
  }

  ExprPtr parse_andexpr() {
    ExprPtr lhs = parse_compexpr();
    while (const Token* t = peek()) {
      if (!is_keyword(*t, "and")) break;
      const SourcePos pos = t->pos();
      ++pos_;
      lhs = make_binary(ExprKind::And, std::move(lhs), parse_compexpr(), pos);
    }
    return lhs;
  }

  ExprPtr parse_compexpr() {
    ExprPtr lhs = parse_unary();
    while (const Token* t = peek()) {
      if (!is_keyword(*t, "o")) break;
      const SourcePos pos = t->pos();
      ++pos_;
      lhs = make_binary(ExprKind::Compose, std::move(lhs), parse_unary(), pos);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    const Token* t = peek();
    if (!t) fail("an expression");
    const SourcePos pos = t->pos();
    if (is_keyword(*t, "not")) {
      ++pos_;
      return make_unary(ExprKind::Not, Hedge::Very, parse_unary(), pos);
    }
    for (const auto& [word, hedge] :
         {std::pair<std::string_view, Hedge>{"very", Hedge::Very},
          {"most", Hedge::Most},
          {"more-or-less", Hedge::MoreOrLess},
          {"not-very", Hedge::NotVery}}) {
      if (is_keyword(*t, word)) {
        ++pos_;
        return make_unary(ExprKind::Hedge, hedge, parse_unary(), pos);
      }
    }
    if (t->kind == TokenKind::Ident) {
      ++pos_;
      return make_ref(t->text, pos);
    }
    if (is_symbol(*t, "(")) {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect_symbol(")");
      return inner;
    }
    fail("an expression");
  }
};

}  // namespace detail

inline Program parse(const std::vector<Token>& tokens) {
  return detail::Parser(tokens).parse_program();
}

inline Program parse(std::string_view source) { return parse(tokenize(source)); }

}  // namespace syad::dsl
