#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syad/errors.hpp"
#include "syad/fuzzy.hpp"
#include "syad/relation.hpp"

namespace syad {

enum class Rule { R1, R2, R3, R4, R5 };

/// How the subjects of a two-subject proposition are joined.
enum class SubjectLink { None, And, Or };

/// A fuzzy proposition "x is A" or "x and/or y are A". Subject names exist
/// only for schema matching; grades attach to universe elements.
struct Proposition {
  Proposition(std::vector<std::string> subjects_, SubjectLink link_, FuzzySet term_)
      : subjects(std::move(subjects_)), link(link_), term(std::move(term_)) {
    if (subjects.empty() || subjects.size() > 2) {
      throw SchemaMismatch("a proposition takes one or two subjects");
    }
    if (subjects.size() == 2 && subjects[0] == subjects[1]) {
      throw SchemaMismatch("proposition subjects must be distinct");
    }
    if ((subjects.size() == 1) != (link == SubjectLink::None)) {
      throw SchemaMismatch("two subjects need 'and' or 'or', one subject needs neither");
    }
  }

  std::vector<std::string> subjects;
  SubjectLink link;
  FuzzySet term;
};

/// A fuzzy conditional "if x is A then y is B".
struct Conditional {
  Conditional(std::string antecedent_var_, FuzzySet antecedent_,
              std::string consequent_var_, FuzzySet consequent_)
      : antecedent_var(std::move(antecedent_var_)),
        antecedent(std::move(antecedent_)),
        consequent_var(std::move(consequent_var_)),
        consequent(std::move(consequent_)) {
    if (antecedent_var == consequent_var) {
      throw SchemaMismatch("antecedent and consequent variables must be distinct");
    }
  }

  std::string antecedent_var;
  FuzzySet antecedent;
  std::string consequent_var;
  FuzzySet consequent;
};

namespace detail {

inline void expect_single_subject(const Proposition& p, const char* role) {
  if (p.subjects.size() != 1) {
    throw SchemaMismatch(std::string(role) + " must have a single subject");
  }
}

inline void expect_pair(const Proposition& p, SubjectLink link, const char* role) {
  if (p.subjects.size() != 2 || p.link != link) {
    throw SchemaMismatch(std::string(role) + " must be two subjects joined by '" +
                         (link == SubjectLink::And ? "and" : "or") + "'");
  }
}

inline void expect_shared(const std::string& a, const std::string& b) {
  if (a != b) {
    throw SchemaMismatch("shared variable names disagree: '" + a + "' vs '" + b + "'");
  }
}

}  // namespace detail

/// Applies one of the schema rules R1-R4.
///
///   R1: "x is A" + "x and y are B"    ->  "y is A AND B"
///   R2: "x is A" + "x or y is B"      ->  "y is A OR B"
///   R3: "x and y are A" + "y and z are B" -> "x and z are A AND B"
///   R4: "x or y are A" + "y or z are B"   -> "x or z are A OR B"
///
/// The premise terms must share a universe; subject patterns must fit the
/// rule schema and shared variables must carry the same name.
inline Proposition apply_rule(Rule rule, const Proposition& p, const Proposition& q) {
  switch (rule) {
    case Rule::R1:
    case Rule::R2: {
      const bool conj = rule == Rule::R1;
      detail::expect_single_subject(p, "the first premise");
      detail::expect_pair(q, conj ? SubjectLink::And : SubjectLink::Or,
                          "the second premise");
      detail::expect_shared(p.subjects[0], q.subjects[0]);
      FuzzySet term = combine(p.term, q.term, conj ? Connective::And : Connective::Or);
      return Proposition({q.subjects[1]}, SubjectLink::None, std::move(term));
    }
    case Rule::R3:
    case Rule::R4: {
      const bool conj = rule == Rule::R3;
      const SubjectLink link = conj ? SubjectLink::And : SubjectLink::Or;
      detail::expect_pair(p, link, "the first premise");
      detail::expect_pair(q, link, "the second premise");
      detail::expect_shared(p.subjects[1], q.subjects[0]);
      FuzzySet term = combine(p.term, q.term, conj ? Connective::And : Connective::Or);
      return Proposition({p.subjects[0], q.subjects[1]}, link, std::move(term));
    }
    case Rule::R5:
      throw SchemaMismatch("R5 takes a conditional; use generalized_modus_ponens");
  }
  throw Error("unreachable rule");
}

/// R5, the compositional rule of inference: from "x is A'" and
/// "if x is A then y is B" conclude "y is B'" with
/// B' = A' o (A -> B), i.e. B'(y) = max over x of min(A'(x), max(1 - A(x), B(y))).
inline Proposition generalized_modus_ponens(const Proposition& fact,
                                            const Conditional& rule) {
  detail::expect_single_subject(fact, "the fact");
  detail::expect_shared(fact.subjects[0], rule.antecedent_var);
  if (!same_universe(fact.term.universe(), rule.antecedent.universe())) {
    throw UniverseMismatch("fact and antecedent live on different universes");
  }
  FuzzySet conclusion =
      compose(fact.term, implication_relation(rule.antecedent, rule.consequent));
  return Proposition({rule.consequent_var}, SubjectLink::None, std::move(conclusion));
}

}  // namespace syad
