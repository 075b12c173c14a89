#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "syad/errors.hpp"
#include "syad/fuzzy.hpp"
#include "syad/inference.hpp"

namespace syad::dsl {

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind { Ref, Not, Hedge, And, Or, Implies, Compose };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind;
  SourcePos pos;
  std::string name;   // Ref
  Hedge hedge{};      // Hedge
  ExprPtr lhs;        // unary operand, or left operand
  ExprPtr rhs;        // right operand
};

inline ExprPtr make_ref(std::string name, SourcePos pos = {}) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Ref;
  e->pos = pos;
  e->name = std::move(name);
  return e;
}

inline ExprPtr make_unary(ExprKind kind, Hedge hedge, ExprPtr operand, SourcePos pos = {}) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->hedge = hedge;
  e->lhs = std::move(operand);
  return e;
}

inline ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {}) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

// ---------------------------------------------------------------------------
// Statements

/// A numeric literal as written, with its parsed value.
struct NumberLit {
  double value = 0.0;
  std::string text;
  SourcePos pos;
};

struct Singleton {
  NumberLit grade;
  std::string element;
};

struct UniverseDecl {
  std::string name;
  std::vector<std::string> elements;
};

struct SetDecl {
  std::string name;
  std::string universe;
  std::vector<Singleton> singletons;
};

struct RelEntry {
  NumberLit grade;
  std::string x;
  std::string y;
};

struct RelationDecl {
  std::string name;
  std::string domain;
  std::string codomain;
  std::vector<RelEntry> entries;
};

struct SyadDecl {
  std::string name;
  std::string asti;
  std::string avaktavya;
  std::string time_rel;
  std::optional<std::string> at_time;
};

struct EvalQuery {
  ExprPtr expr;
};

struct PropSyntax {
  std::vector<std::string> subjects;
  SubjectLink link = SubjectLink::None;
  std::string set_name;
  SourcePos pos;
};

struct CondSyntax {
  PropSyntax antecedent;
  PropSyntax consequent;
};

struct InferQuery {
  std::string rule_id;
  PropSyntax premise;
  std::variant<PropSyntax, CondSyntax> second;
};

struct SyadQuery {
  std::string element;
  std::string state;
};

struct Statement {
  std::variant<UniverseDecl, SetDecl, RelationDecl, SyadDecl, EvalQuery, InferQuery,
               SyadQuery>
      node;
  SourcePos pos;
};

using Program = std::vector<Statement>;

// ---------------------------------------------------------------------------
// Printing. The printer emits source that re-parses to a structurally equal
// AST; numeric literals keep their original spelling.

inline std::string_view hedge_keyword(Hedge h) {
  switch (h) {
    case Hedge::Very: return "very";
    case Hedge::Most: return "most";
    case Hedge::MoreOrLess: return "more-or-less";
    case Hedge::NotVery: return "not-very";
  }
  return "?";
}

namespace detail {

// Binding strength per grammar level; parentheses appear exactly where the
// grammar would otherwise reassociate.
inline int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Implies: return 1;
    case ExprKind::Or: return 2;
    case ExprKind::And: return 3;
    case ExprKind::Compose: return 4;
    case ExprKind::Not:
    case ExprKind::Hedge: return 5;
    case ExprKind::Ref: return 6;
  }
  return 0;
}

inline void print_expr(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case ExprKind::Ref:
      out += e.name;
      break;
    case ExprKind::Not:
      out += "not ";
      print_expr(*e.lhs, 5, out);
      break;
    case ExprKind::Hedge:
      out += hedge_keyword(e.hedge);
      out += ' ';
      print_expr(*e.lhs, 5, out);
      break;
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Compose: {
      print_expr(*e.lhs, prec, out);
      out += e.kind == ExprKind::And ? " and " : e.kind == ExprKind::Or ? " or " : " o ";
      print_expr(*e.rhs, prec + 1, out);
      break;
    }
    case ExprKind::Implies:
      print_expr(*e.lhs, 2, out);
      out += " implies ";
      print_expr(*e.rhs, 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  std::string out;
  detail::print_expr(e, 0, out);
  return out;
}

inline std::string to_string(const PropSyntax& p) {
  std::string out = p.subjects[0];
  if (p.subjects.size() == 2) {
    out += p.link == SubjectLink::And ? " and " : " or ";
    out += p.subjects[1];
    out += " are ";
  } else {
    out += " is ";
  }
  out += p.set_name;
  return out;
}

inline std::string to_string(const Statement& stmt) {
  struct Printer {
    std::string operator()(const UniverseDecl& u) const {
      std::string out = "universe " + u.name + " = {";
      for (std::size_t i = 0; i < u.elements.size(); ++i) {
        if (i) out += ", ";
        out += u.elements[i];
      }
      return out + "}";
    }
    std::string operator()(const SetDecl& s) const {
      std::string out = "set " + s.name + " on " + s.universe + " = ";
      for (std::size_t i = 0; i < s.singletons.size(); ++i) {
        if (i) out += " + ";
        out += s.singletons[i].grade.text + "/" + s.singletons[i].element;
      }
      return out;
    }
    std::string operator()(const RelationDecl& r) const {
      std::string out = "rel " + r.name + " on " + r.domain + " x " + r.codomain + " = ";
      for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (i) out += " + ";
        out += r.entries[i].grade.text + "/(" + r.entries[i].x + ", " + r.entries[i].y + ")";
      }
      return out;
    }
    std::string operator()(const SyadDecl& s) const {
      std::string out = "syadstate " + s.name + " = asti " + s.asti + ", avaktavya " +
                        s.avaktavya + ", time " + s.time_rel;
      if (s.at_time) out += ", at " + *s.at_time;
      return out;
    }
    std::string operator()(const EvalQuery& q) const { return "eval " + to_string(*q.expr); }
    std::string operator()(const InferQuery& q) const {
      std::string out = "infer " + q.rule_id + ": " + to_string(q.premise) + "; ";
      if (const auto* prop = std::get_if<PropSyntax>(&q.second)) {
        out += to_string(*prop);
      } else {
        const auto& cond = std::get<CondSyntax>(q.second);
        out += "if " + to_string(cond.antecedent) + " then " + to_string(cond.consequent);
      }
      return out;
    }
    std::string operator()(const SyadQuery& q) const {
      return "syad " + q.element + " given " + q.state;
    }
  };
  return std::visit(Printer{}, stmt.node);
}

inline std::string to_string(const Program& program) {
  std::string out;
  for (const Statement& stmt : program) {
    out += to_string(stmt);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural equality (source positions and literal spellings ignored).

inline bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Ref: return a.name == b.name;
    case ExprKind::Not: return equal(*a.lhs, *b.lhs);
    case ExprKind::Hedge: return a.hedge == b.hedge && equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

inline bool equal(const PropSyntax& a, const PropSyntax& b) {
  return a.subjects == b.subjects && a.link == b.link && a.set_name == b.set_name;
}

inline bool equal(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  struct Cmp {
    const Statement& other;
    bool operator()(const UniverseDecl& x) const {
      const auto& y = std::get<UniverseDecl>(other.node);
      return x.name == y.name && x.elements == y.elements;
    }
    bool operator()(const SetDecl& x) const {
      const auto& y = std::get<SetDecl>(other.node);
      if (x.name != y.name || x.universe != y.universe ||
          x.singletons.size() != y.singletons.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.singletons.size(); ++i) {
        if (x.singletons[i].element != y.singletons[i].element ||
            x.singletons[i].grade.value != y.singletons[i].grade.value) {
          return false;
        }
      }
      return true;
    }
    bool operator()(const RelationDecl& x) const {
      const auto& y = std::get<RelationDecl>(other.node);
      if (x.name != y.name || x.domain != y.domain || x.codomain != y.codomain ||
          x.entries.size() != y.entries.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.entries.size(); ++i) {
        if (x.entries[i].x != y.entries[i].x || x.entries[i].y != y.entries[i].y ||
            x.entries[i].grade.value != y.entries[i].grade.value) {
          return false;
        }
      }
      return true;
    }
    bool operator()(const SyadDecl& x) const {
      const auto& y = std::get<SyadDecl>(other.node);
      return x.name == y.name && x.asti == y.asti && x.avaktavya == y.avaktavya &&
             x.time_rel == y.time_rel && x.at_time == y.at_time;
    }
    bool operator()(const EvalQuery& x) const {
      return equal(*x.expr, *std::get<EvalQuery>(other.node).expr);
    }
    bool operator()(const InferQuery& x) const {
      const auto& y = std::get<InferQuery>(other.node);
      if (x.rule_id != y.rule_id || !equal(x.premise, y.premise) ||
          x.second.index() != y.second.index()) {
        return false;
      }
      if (const auto* prop = std::get_if<PropSyntax>(&x.second)) {
        return equal(*prop, std::get<PropSyntax>(y.second));
      }
      const auto& cx = std::get<CondSyntax>(x.second);
      const auto& cy = std::get<CondSyntax>(y.second);
      return equal(cx.antecedent, cy.antecedent) && equal(cx.consequent, cy.consequent);
    }
    bool operator()(const SyadQuery& x) const {
      const auto& y = std::get<SyadQuery>(other.node);
      return x.element == y.element && x.state == y.state;
    }
  };
  return std::visit(Cmp{b}, a.node);
}

inline bool equal(const Program& a, const Program& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace syad::dsl
