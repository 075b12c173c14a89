#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "syad/errors.hpp"
#include "syad/fuzzy.hpp"

namespace syad {

/// A fuzzy relation over X x Y, stored as a dense row-major grade matrix.
/// Universes at DSL scale are small, so density costs nothing.
class FuzzyRelation {
public:
  FuzzyRelation(UniversePtr domain, UniversePtr codomain, std::vector<Grade> grades)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        grades_(std::move(grades)) {
    if (!domain_ || !codomain_) throw Error("fuzzy relation requires two universes");
    if (grades_.size() != domain_->size() * codomain_->size()) {
      throw Error("relation over '" + domain_->name() + "' x '" + codomain_->name() +
                  "' needs " + std::to_string(domain_->size() * codomain_->size()) +
                  " grades, got " + std::to_string(grades_.size()));
    }
  }

  static FuzzyRelation zeros(UniversePtr domain, UniversePtr codomain) {
    std::vector<Grade> g(domain->size() * codomain->size());
    return FuzzyRelation(std::move(domain), std::move(codomain), std::move(g));
  }

  const UniversePtr& domain() const { return domain_; }
  const UniversePtr& codomain() const { return codomain_; }
  std::size_t rows() const { return domain_->size(); }
  std::size_t cols() const { return codomain_->size(); }

  Grade at(std::size_t x, std::size_t y) const { return grades_[x * cols() + y]; }

  Grade at(const std::string& x, const std::string& y) const {
    return at(domain_->index_of(x), codomain_->index_of(y));
  }

  const std::vector<Grade>& grades() const { return grades_; }

private:
  UniversePtr domain_;
  UniversePtr codomain_;
  std::vector<Grade> grades_;
};

/// Builds a relation from entries `grade/(x, y)`; unlisted pairs get grade 0.
inline FuzzyRelation make_relation(
    const UniversePtr& domain, const UniversePtr& codomain,
    const std::vector<std::tuple<std::string, std::string, double>>& entries) {
  const std::size_t cols = codomain->size();
  std::vector<Grade> grades(domain->size() * cols);
  std::vector<bool> seen(grades.size(), false);
  for (const auto& [x, y, value] : entries) {
    const std::size_t i = domain->index_of(x) * cols + codomain->index_of(y);
    if (seen[i]) throw DuplicateElement("(" + x + ", " + y + ")");
    seen[i] = true;
    grades[i] = Grade(value);
  }
  return FuzzyRelation(domain, codomain, std::move(grades));
}

/// Zadeh product: grade at (x, y) is min(a(x), b(y)).
inline FuzzyRelation cartesian_product(const FuzzySet& a, const FuzzySet& b) {
  std::vector<Grade> grades;
  grades.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      grades.push_back(Grade(std::min(a[i].value(), b[j].value())));
    }
  }
  return FuzzyRelation(a.universe(), b.universe(), std::move(grades));
}

/// Sup-min (max-min) composition of a set with a relation:
/// out(y) = max over x of min(a(x), r(x, y)).
inline FuzzySet compose(const FuzzySet& a, const FuzzyRelation& r) {
  if (!same_universe(a.universe(), r.domain())) {
    throw UniverseMismatch("composed set lives on '" + a.universe()->name() +
                           "' but the relation's domain is '" + r.domain()->name() + "'");
  }
  std::vector<Grade> out;
  out.reserve(r.cols());
  for (std::size_t y = 0; y < r.cols(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < r.rows(); ++x) {
      best = std::max(best, std::min(a[x].value(), r.at(x, y).value()));
    }
    out.push_back(Grade(best));
  }
  return FuzzySet(r.codomain(), std::move(out));
}

/// Max-min composition of two relations, (X x Y) o (Y x Z) -> X x Z.
inline FuzzyRelation compose(const FuzzyRelation& r, const FuzzyRelation& s) {
  if (!same_universe(r.codomain(), s.domain())) {
    throw UniverseMismatch("relation codomain '" + r.codomain()->name() +
                           "' does not match relation domain '" + s.domain()->name() + "'");
  }
  std::vector<Grade> out;
  out.reserve(r.rows() * s.cols());
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t z = 0; z < s.cols(); ++z) {
      double best = 0.0;
      for (std::size_t y = 0; y < r.cols(); ++y) {
        best = std::max(best, std::min(r.at(x, y).value(), s.at(y, z).value()));
      }
      out.push_back(Grade(best));
    }
  }
  return FuzzyRelation(r.domain(), s.codomain(), std::move(out));
}

/// Kleene-Dienes implication lifted to X x Y:
/// grade at (x, y) is max(1 - a(x), b(y)).
inline FuzzyRelation implication_relation(const FuzzySet& a, const FuzzySet& b) {
  std::vector<Grade> grades;
  grades.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      grades.push_back(Grade(std::max(1.0 - a[i].value(), b[j].value())));
    }
  }
  return FuzzyRelation(a.universe(), b.universe(), std::move(grades));
}

}  // namespace syad
