#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syad/errors.hpp"

namespace syad {

/// A membership grade in the unit interval. Construction rejects values
/// outside [0, 1]; there is no silent clamping.
class Grade {
public:
  constexpr Grade() = default;

  explicit Grade(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw GradeOutOfRange(value);
    }
  }

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

  auto operator<=>(const Grade&) const = default;

private:
  double value_ = 0.0;
};

/// Finite, ordered universe of discourse. Element labels are case-sensitive
/// and pairwise distinct; iteration order is declaration order.
class Universe {
public:
  Universe(std::string name, std::vector<std::string> elements)
      : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty()) {
      throw Error("universe '" + name_ + "' must contain at least one element");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second) {
        throw DuplicateElement(elements_[i]);
      }
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownElement(label, name_);
    return it->second;
  }

  bool operator==(const Universe& other) const {
    return name_ == other.name_ && elements_ == other.elements_;
  }

private:
  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::string name, std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(name), std::move(elements));
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A discrete fuzzy set: one grade per universe element, total by
/// construction. Immutable after construction.
class FuzzySet {
public:
  FuzzySet(UniversePtr universe, std::vector<Grade> grades)
      : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) throw Error("fuzzy set requires a universe");
    if (grades_.size() != universe_->size()) {
      throw Error("fuzzy set over '" + universe_->name() + "' needs " +
                  std::to_string(universe_->size()) + " grades, got " +
                  std::to_string(grades_.size()));
    }
  }

  static FuzzySet zeros(UniversePtr universe) {
    std::vector<Grade> g(universe->size());
    return FuzzySet(std::move(universe), std::move(g));
  }

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Grade>& grades() const { return grades_; }
  std::size_t size() const { return grades_.size(); }

  Grade operator[](std::size_t i) const { return grades_[i]; }

  Grade at(const std::string& label) const {
    return grades_[universe_->index_of(label)];
  }

private:
  UniversePtr universe_;
  std::vector<Grade> grades_;
};

/// Builds a fuzzy set from singleton terms `grade/element`. Elements not
/// listed get grade 0, so partial declarations are legal. Rejects grades
/// outside [0, 1], labels outside the universe, and repeated labels.
inline FuzzySet make_set(const UniversePtr& universe,
                         const std::vector<std::pair<std::string, double>>& pairs) {
  std::vector<Grade> grades(universe->size());
  std::vector<bool> seen(universe->size(), false);
  for (const auto& [label, value] : pairs) {
    const std::size_t i = universe->index_of(label);
    if (seen[i]) throw DuplicateElement(label);
    seen[i] = true;
    grades[i] = Grade(value);
  }
  return FuzzySet(universe, std::move(grades));
}

inline Grade membership(const FuzzySet& set, const std::string& element) {
  return set.at(element);
}

enum class Connective { And, Or, Implies };

enum class Hedge { Very, Most, MoreOrLess, NotVery };

namespace detail {

inline void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch("sets live on '" + a.universe()->name() + "' and '" +
                           b.universe()->name() + "'");
  }
}

template <typename F>
FuzzySet pointwise(const FuzzySet& a, F&& f) {
  std::vector<Grade> out;
  out.reserve(a.size());
  for (Grade g : a.grades()) out.push_back(Grade(f(g.value())));
  return FuzzySet(a.universe(), std::move(out));
}

template <typename F>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, F&& f) {
  require_same_universe(a, b);
  std::vector<Grade> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(Grade(f(a[i].value(), b[i].value())));
  }
  return FuzzySet(a.universe(), std::move(out));
}

}  // namespace detail

/// Pointwise connectives: And = min, Or = max, Implies = Kleene-Dienes
/// max(1 - a, b). Operands must share a universe.
inline FuzzySet combine(const FuzzySet& a, const FuzzySet& b, Connective c) {
  switch (c) {
    case Connective::And:
      return detail::pointwise(a, b, [](double x, double y) { return std::min(x, y); });
    case Connective::Or:
      return detail::pointwise(a, b, [](double x, double y) { return std::max(x, y); });
    case Connective::Implies:
      return detail::pointwise(a, b, [](double x, double y) { return std::max(1.0 - x, y); });
  }
  throw Error("unreachable connective");
}

inline FuzzySet negate(const FuzzySet& a) {
  return detail::pointwise(a, [](double x) { return 1.0 - x; });
}

/// Linguistic hedges as grade transforms: Very and Most are the
/// concentration (square) operator, MoreOrLess is diffusion (square root),
/// NotVery is 1 - g^2.
inline FuzzySet apply_hedge(const FuzzySet& a, Hedge h) {
  switch (h) {
    case Hedge::Very:
    case Hedge::Most:
      return detail::pointwise(a, [](double x) { return x * x; });
    case Hedge::MoreOrLess:
      return detail::pointwise(a, [](double x) { return std::sqrt(x); });
    case Hedge::NotVery:
      return detail::pointwise(a, [](double x) { return 1.0 - x * x; });
  }
  throw Error("unreachable hedge");
}

inline Grade height(const FuzzySet& a) {
  double h = 0.0;
  for (Grade g : a.grades()) h = std::max(h, g.value());
  return Grade(h);
}

}  // namespace syad
