#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "syad/dsl/ast.hpp"
#include "syad/errors.hpp"
#include "syad/fuzzy.hpp"
#include "syad/inference.hpp"
#include "syad/relation.hpp"
#include "syad/saptabhangi.hpp"

namespace syad::dsl {

/// Anything a DSL name can denote.
using Value = std::variant<UniversePtr, FuzzySet, FuzzyRelation, SyadState>;

/// Name -> value table. Names are unique across kinds; redefinition is an
/// error. One evaluation mutates one Environment at a time.
class Environment {
public:
  void define(const std::string& name, Value value, SourcePos pos) {
    if (table_.count(name)) {
      throw SemanticError("name '" + name + "' is already defined", pos);
    }
    table_.emplace(name, std::move(value));
  }

  const Value* find(const std::string& name) const {
    auto it = table_.find(name);
    return it == table_.end() ? nullptr : &it->second;
  }

  const Value& lookup(const std::string& name, SourcePos pos) const {
    if (const Value* v = find(name)) return *v;
    throw SemanticError("unknown name '" + name + "'", pos);
  }

  template <typename T>
  const T& lookup_as(const std::string& name, const char* wanted, SourcePos pos) const {
    const Value& v = lookup(name, pos);
    if (const T* t = std::get_if<T>(&v)) return *t;
    throw SemanticError("'" + name + "' is not " + wanted, pos);
  }

  bool empty() const { return table_.empty(); }

private:
  std::unordered_map<std::string, Value> table_;
};

/// Intermediate object surfaced by `--trace`.
struct TraceItem {
  std::string label;
  std::variant<FuzzySet, FuzzyRelation> value;
};

/// One query's outcome: a header naming the query plus the value to print.
struct QueryResult {
  std::string header;
  std::variant<FuzzySet, FuzzyRelation, SevenValuation> payload;
  std::vector<TraceItem> trace;
};

namespace detail {

using ExprValue = std::variant<FuzzySet, FuzzyRelation>;

class Evaluator {
public:
  explicit Evaluator(Environment& env) : env_(env) {}

  void run(const Statement& stmt, const std::function<void(QueryResult)>& sink) {
    struct Visitor {
      Evaluator& self;
      const Statement& stmt;
      const std::function<void(QueryResult)>& sink;

      void operator()(const UniverseDecl& decl) const { self.declare_universe(decl, stmt.pos); }
      void operator()(const SetDecl& decl) const { self.declare_set(decl, stmt.pos); }
      void operator()(const RelationDecl& decl) const { self.declare_relation(decl, stmt.pos); }
      void operator()(const SyadDecl& decl) const { self.declare_state(decl, stmt.pos); }
      void operator()(const EvalQuery& q) const { sink(self.eval_query(q, stmt)); }
      void operator()(const InferQuery& q) const { sink(self.infer_query(q, stmt)); }
      void operator()(const SyadQuery& q) const { sink(self.syad_query(q, stmt)); }
    };
    std::visit(Visitor{*this, stmt, sink}, stmt.node);
  }

private:
  Environment& env_;

  // Core-library errors carry no position; attach the statement's.
  template <typename F>
  auto lifted(SourcePos pos, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const PositionedError&) {
      throw;
    } catch (const Error& e) {
      throw SemanticError(e.what(), pos);
    }
  }

  void declare_universe(const UniverseDecl& decl, SourcePos pos) {
    Value v = lifted(pos, [&] { return Value(make_universe(decl.name, decl.elements)); });
    env_.define(decl.name, std::move(v), pos);
  }

  void declare_set(const SetDecl& decl, SourcePos pos) {
    const auto& universe = env_.lookup_as<UniversePtr>(decl.universe, "a universe", pos);
    std::vector<std::pair<std::string, double>> pairs;
    pairs.reserve(decl.singletons.size());
    for (const Singleton& s : decl.singletons) pairs.emplace_back(s.element, s.grade.value);
    Value v = lifted(pos, [&] { return Value(make_set(universe, pairs)); });
    env_.define(decl.name, std::move(v), pos);
  }

  void declare_relation(const RelationDecl& decl, SourcePos pos) {
    const auto& domain = env_.lookup_as<UniversePtr>(decl.domain, "a universe", pos);
    const auto& codomain = env_.lookup_as<UniversePtr>(decl.codomain, "a universe", pos);
    std::vector<std::tuple<std::string, std::string, double>> entries;
    entries.reserve(decl.entries.size());
    for (const RelEntry& e : decl.entries) entries.emplace_back(e.x, e.y, e.grade.value);
    Value v = lifted(pos, [&] { return Value(make_relation(domain, codomain, entries)); });
    env_.define(decl.name, std::move(v), pos);
  }

  void declare_state(const SyadDecl& decl, SourcePos pos) {
    const auto& asti = env_.lookup_as<FuzzySet>(decl.asti, "a fuzzy set", pos);
    const auto& avaktavya = env_.lookup_as<FuzzySet>(decl.avaktavya, "a fuzzy set", pos);
    const auto& time_rel = env_.lookup_as<FuzzyRelation>(decl.time_rel, "a relation", pos);
    Value v = lifted(pos, [&]() -> Value {
      if (decl.at_time) return SyadState(asti, avaktavya, time_rel, *decl.at_time);
      return SyadState(asti, avaktavya, time_rel);
    });
    env_.define(decl.name, std::move(v), pos);
  }

  ExprValue eval_expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Ref: {
        const Value& v = env_.lookup(e.name, e.pos);
        if (const auto* set = std::get_if<FuzzySet>(&v)) return *set;
        if (const auto* rel = std::get_if<FuzzyRelation>(&v)) return *rel;
        throw SemanticError("'" + e.name + "' is not a fuzzy set or relation", e.pos);
      }
      case ExprKind::Not: {
        FuzzySet a = expect_set(eval_expr(*e.lhs), *e.lhs);
        return negate(a);
      }
      case ExprKind::Hedge: {
        FuzzySet a = expect_set(eval_expr(*e.lhs), *e.lhs);
        return apply_hedge(a, e.hedge);
      }
      case ExprKind::And:
      case ExprKind::Or:
      case ExprKind::Implies: {
        FuzzySet a = expect_set(eval_expr(*e.lhs), *e.lhs);
        FuzzySet b = expect_set(eval_expr(*e.rhs), *e.rhs);
        const Connective c = e.kind == ExprKind::And   ? Connective::And
                             : e.kind == ExprKind::Or  ? Connective::Or
                                                       : Connective::Implies;
        return lifted(e.pos, [&] { return combine(a, b, c); });
      }
      case ExprKind::Compose: {
        ExprValue lhs = eval_expr(*e.lhs);
        const auto& rel = expect_relation(eval_expr(*e.rhs), *e.rhs);
        if (const auto* set = std::get_if<FuzzySet>(&lhs)) {
          return lifted(e.pos, [&]() -> ExprValue { return compose(*set, rel); });
        }
        const auto& lrel = std::get<FuzzyRelation>(lhs);
        return lifted(e.pos, [&]() -> ExprValue { return compose(lrel, rel); });
      }
    }
    throw SemanticError("unreachable expression kind", e.pos);
  }

  static FuzzySet expect_set(ExprValue v, const Expr& at) {
    if (auto* set = std::get_if<FuzzySet>(&v)) return std::move(*set);
    throw SemanticError("expected a fuzzy set here", at.pos);
  }

  static FuzzyRelation expect_relation(ExprValue v, const Expr& at) {
    if (auto* rel = std::get_if<FuzzyRelation>(&v)) return std::move(*rel);
    throw SemanticError("expected a fuzzy relation here", at.pos);
  }

  QueryResult eval_query(const EvalQuery& q, const Statement& stmt) {
    ExprValue value = eval_expr(*q.expr);
    if (auto* set = std::get_if<FuzzySet>(&value)) {
      return {to_string(stmt), std::move(*set), {}};
    }
    return {to_string(stmt), std::move(std::get<FuzzyRelation>(value)), {}};
  }

  Proposition resolve_prop(const PropSyntax& p, SourcePos pos) {
    const auto& term = env_.lookup_as<FuzzySet>(p.set_name, "a fuzzy set", p.pos);
    return lifted(pos, [&] { return Proposition(p.subjects, p.link, term); });
  }

  static std::string conclusion_phrase(const Proposition& p) {
    if (p.subjects.size() == 1) return p.subjects[0] + " is";
    return p.subjects[0] + (p.link == SubjectLink::And ? " and " : " or ") +
           p.subjects[1] + " are";
  }

  QueryResult infer_query(const InferQuery& q, const Statement& stmt) {
    std::vector<TraceItem> trace;
    Proposition premise = resolve_prop(q.premise, stmt.pos);

    Proposition conclusion = [&] {
      if (q.rule_id == "R5") {
        const auto* cond_syntax = std::get_if<CondSyntax>(&q.second);
        if (!cond_syntax) {
          throw SemanticError("R5 needs a conditional second premise (if ... then ...)",
                              stmt.pos);
        }
        Conditional cond = resolve_conditional(*cond_syntax, stmt.pos);
        trace.push_back(
            {"implication relation " + cond_syntax->antecedent.set_name + " -> " +
                 cond_syntax->consequent.set_name,
             implication_relation(cond.antecedent, cond.consequent)});
        Proposition out = lifted(stmt.pos,
                                 [&] { return generalized_modus_ponens(premise, cond); });
        trace.push_back({"composition " + q.premise.set_name + " o (" +
                             cond_syntax->antecedent.set_name + " -> " +
                             cond_syntax->consequent.set_name + ")",
                         out.term});
        return out;
      }
      const auto* prop_syntax = std::get_if<PropSyntax>(&q.second);
      if (!prop_syntax) {
        throw SemanticError("rule " + q.rule_id + " takes a proposition, not a conditional",
                            stmt.pos);
      }
      Proposition second = resolve_prop(*prop_syntax, stmt.pos);
      const Rule rule = q.rule_id == "R1"   ? Rule::R1
                        : q.rule_id == "R2" ? Rule::R2
                        : q.rule_id == "R3" ? Rule::R3
                                            : Rule::R4;
      return lifted(stmt.pos, [&] { return apply_rule(rule, premise, second); });
    }();

    return {to_string(stmt) + " => " + conclusion_phrase(conclusion),
            std::move(conclusion.term), std::move(trace)};
  }

  Conditional resolve_conditional(const CondSyntax& c, SourcePos pos) {
    if (c.antecedent.subjects.size() != 1 || c.consequent.subjects.size() != 1) {
      throw SemanticError("a conditional takes single-subject propositions", pos);
    }
    const auto& antecedent =
        env_.lookup_as<FuzzySet>(c.antecedent.set_name, "a fuzzy set", c.antecedent.pos);
    const auto& consequent =
        env_.lookup_as<FuzzySet>(c.consequent.set_name, "a fuzzy set", c.consequent.pos);
    return lifted(pos, [&] {
      return Conditional(c.antecedent.subjects[0], antecedent, c.consequent.subjects[0],
                         consequent);
    });
  }

  QueryResult syad_query(const SyadQuery& q, const Statement& stmt) {
    const auto& state = env_.lookup_as<SyadState>(q.state, "a syadstate", stmt.pos);
    return {to_string(stmt), lifted(stmt.pos, [&] { return valuate(state, q.element); }), {}};
  }
};

}  // namespace detail

/// Evaluates statements in order against `env`, handing each query result to
/// `sink` as it is produced. The first error aborts evaluation.
inline void evaluate(const Program& program, Environment& env,
                     const std::function<void(QueryResult)>& sink) {
  detail::Evaluator evaluator(env);
  for (const Statement& stmt : program) evaluator.run(stmt, sink);
}

inline std::vector<QueryResult> evaluate(const Program& program, Environment& env) {
  std::vector<QueryResult> results;
  evaluate(program, env, [&](QueryResult r) { results.push_back(std::move(r)); });
  return results;
}

}  // namespace syad::dsl
