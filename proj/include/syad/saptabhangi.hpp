#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syad/errors.hpp"
#include "syad/fuzzy.hpp"
#include "syad/relation.hpp"

namespace syad {

/// Everything needed to valuate the seven-fold predication of one domain:
/// the degree to which each element "is" (asti), the degree to which it is
/// indescribable (avaktavya), a fuzzy relation between elements and time
/// points, and a distinguished constant time point.
class SyadState {
public:
  SyadState(FuzzySet asti, FuzzySet avaktavya, FuzzyRelation time_relation,
            std::string fixed_time)
      : asti_(std::move(asti)),
        avaktavya_(std::move(avaktavya)),
        time_relation_(std::move(time_relation)),
        fixed_time_(std::move(fixed_time)) {
    if (!same_universe(asti_.universe(), avaktavya_.universe())) {
      throw UniverseMismatch("asti and avaktavya must share a universe");
    }
    if (!same_universe(asti_.universe(), time_relation_.domain())) {
      throw UniverseMismatch("the time relation's domain must be the asti universe");
    }
    fixed_time_index_ = time_relation_.codomain()->index_of(fixed_time_);
  }

  /// Without an explicit time point, the first element of the time universe
  /// is the constant.
  SyadState(FuzzySet asti, FuzzySet avaktavya, FuzzyRelation time_relation)
      : SyadState(std::move(asti), std::move(avaktavya),
                  FuzzyRelation(time_relation),
                  time_relation.codomain()->elements().front()) {}

  const FuzzySet& asti() const { return asti_; }
  const FuzzySet& avaktavya() const { return avaktavya_; }
  const FuzzyRelation& time_relation() const { return time_relation_; }
  const std::string& fixed_time() const { return fixed_time_; }
  std::size_t fixed_time_index() const { return fixed_time_index_; }
  const UniversePtr& universe() const { return asti_.universe(); }

private:
  FuzzySet asti_;
  FuzzySet avaktavya_;
  FuzzyRelation time_relation_;
  std::string fixed_time_;
  std::size_t fixed_time_index_ = 0;
};

/// The seven grades of one element, in predication order.
struct SevenValuation {
  std::string element;
  Grade v1;  ///< syad-asti: may be, it is
  Grade v2;  ///< syad-nasti: may be, it is not
  Grade v3;  ///< syad-asti-nasti: it is and it is not, at different times
  Grade v4;  ///< syad-avaktavya: it is and is not at the same time, indescribable
  Grade v5;  ///< syad-asti-avaktavya: it is, yet indescribable
  Grade v6;  ///< syad-nasti-avaktavya: it is not, and indescribable
  Grade v7;  ///< syad-asti-nasti-avaktavya: it is, it is not, and indescribable

  /// Grade of predication `k`, 1-based so get(3) reads v3.
  Grade get(std::size_t k) const {
    const std::array<const Grade*, 7> all{&v1, &v2, &v3, &v4, &v5, &v6, &v7};
    return *all.at(k - 1);
  }

  static constexpr std::array<std::string_view, 7> names{
      "syad-asti",
      "syad-nasti",
      "syad-asti-nasti",
      "syad-avaktavya",
      "syad-asti-avaktavya",
      "syad-nasti-avaktavya",
      "syad-asti-nasti-avaktavya",
  };
};

/// Valuates all seven predications for one element:
///
///   with a = asti(x), n = 1 - a, i = avaktavya(x):
///   v1 = a
///   v2 = n
///   v3 = min(a, max over t of min(n, time(x, t)))
///   v4 = min(a, min(n, time(x, fixed)), i)
///   v5 = min(a, sqrt(i))
///   v6 = min(n, i)
///   v7 = min(a, n, i)
inline SevenValuation valuate(const SyadState& state, const std::string& x) {
  const std::size_t ix = state.universe()->index_of(x);
  const double a = state.asti()[ix].value();
  const double n = 1.0 - a;
  const double i = state.avaktavya()[ix].value();
  const FuzzyRelation& time = state.time_relation();

  double different_times = 0.0;
  for (std::size_t t = 0; t < time.cols(); ++t) {
    different_times = std::max(different_times, std::min(n, time.at(ix, t).value()));
  }
  const double same_time = std::min(n, time.at(ix, state.fixed_time_index()).value());

  SevenValuation out;
  out.element = x;
  out.v1 = Grade(a);
  out.v2 = Grade(n);
  out.v3 = Grade(std::min(a, different_times));
  out.v4 = Grade(std::min(std::min(a, same_time), i));
  out.v5 = Grade(std::min(a, std::sqrt(i)));
  out.v6 = Grade(std::min(n, i));
  out.v7 = Grade(std::min(a, std::min(n, i)));
  return out;
}

inline std::vector<SevenValuation> valuate_all(const SyadState& state) {
  std::vector<SevenValuation> out;
  out.reserve(state.universe()->size());
  for (const std::string& x : state.universe()->elements()) {
    out.push_back(valuate(state, x));
  }
  return out;
}

}  // namespace syad
