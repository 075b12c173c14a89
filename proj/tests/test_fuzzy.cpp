#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support/generators.hpp"
#include "syad/fuzzy.hpp"

using namespace syad;

namespace {

UniversePtr five() { return make_universe("U", {"x1", "x2", "x3", "x4", "x5"}); }

FuzzySet tall(const UniversePtr& u) {
  return make_set(u, {{"x1", 0.56}, {"x2", 0.6}, {"x3", 0.65}, {"x4", 0.67}, {"x5", 0.69}});
}

}  // namespace

TEST_CASE("grade construction enforces the unit interval") {
  CHECK(Grade(0.0).value() == 0.0);
  CHECK(Grade(1.0).value() == 1.0);
  CHECK(Grade(0.56).value() == 0.56);
  CHECK_THROWS_AS(Grade(1.2), GradeOutOfRange);
  CHECK_THROWS_AS(Grade(-0.1), GradeOutOfRange);
  CHECK_THROWS_AS(Grade(std::nan("")), GradeOutOfRange);
}

TEST_CASE("universe rejects duplicates and empty element lists") {
  CHECK_THROWS_AS(make_universe("U", {"a", "a"}), DuplicateElement);
  CHECK_THROWS_AS(make_universe("U", {}), Error);
  const auto u = make_universe("U", {"b", "a"});
  CHECK(u->elements() == std::vector<std::string>{"b", "a"});  // declaration order
  CHECK(u->index_of("a") == 1);
}

TEST_CASE("make_set builds the singleton-sum example") {
  const auto u = five();
  const FuzzySet t = tall(u);
  CHECK(membership(t, "x1").value() == 0.56);
  CHECK(membership(t, "x2").value() == 0.6);
  CHECK(membership(t, "x5").value() == 0.69);
}

TEST_CASE("make_set defaults unlisted elements to zero") {
  const auto u = make_universe("U", {"x1", "x2"});
  const FuzzySet empty = make_set(u, {});
  CHECK(empty.at("x1").value() == 0.0);
  CHECK(empty.at("x2").value() == 0.0);

  const FuzzySet partial = make_set(u, {{"x2", 0.3}});
  CHECK(partial.at("x1").value() == 0.0);
  CHECK(partial.at("x2").value() == 0.3);
}

TEST_CASE("make_set error cases") {
  const auto u = make_universe("U", {"x1"});
  CHECK_THROWS_AS(make_set(u, {{"x1", 1.2}}), GradeOutOfRange);
  CHECK_THROWS_AS(make_set(u, {{"x9", 0.5}}), UnknownElement);
  CHECK_THROWS_AS(make_set(u, {{"x1", 0.1}, {"x1", 0.2}}), DuplicateElement);
}

TEST_CASE("membership of an unknown element fails") {
  const FuzzySet t = tall(five());
  CHECK_THROWS_AS(membership(t, "x9"), UnknownElement);
}

TEST_CASE("combine computes pointwise min, max and implication") {
  const auto u = five();
  const FuzzySet t = tall(u);

  const FuzzySet mid = combine(t, negate(t), Connective::And);
  CHECK(mid.at("x2").value() == 1.0 - 0.6);  // min(0.6, 0.4)

  const FuzzySet same = combine(t, FuzzySet::zeros(u), Connective::Or);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(same[i] == t[i]);

  const FuzzySet zero_antecedent = FuzzySet::zeros(u);
  const FuzzySet imp = combine(zero_antecedent, t, Connective::Implies);
  for (std::size_t i = 0; i < imp.size(); ++i) CHECK(imp[i].value() == 1.0);
}

TEST_CASE("combine rejects mismatched universes") {
  const FuzzySet a = make_set(make_universe("U", {"a"}), {});
  const FuzzySet b = make_set(make_universe("V", {"b"}), {});
  CHECK_THROWS_AS(combine(a, b, Connective::And), UniverseMismatch);
}

TEST_CASE("negation examples") {
  const FuzzySet t = tall(five());
  CHECK(negate(t).at("x1").value() == 1.0 - 0.56);

  const auto u = make_universe("U", {"a", "b"});
  const FuzzySet half = make_set(u, {{"a", 0.5}, {"b", 0.5}});
  const FuzzySet same = negate(half);
  CHECK(same.at("a").value() == 0.5);  // fixed point
  CHECK(same.at("b").value() == 0.5);
}

TEST_CASE("hedges transform grades") {
  const auto u = make_universe("U", {"e"});
  const FuzzySet a = make_set(u, {{"e", 0.6}});
  CHECK(apply_hedge(a, Hedge::Very).at("e").value() == 0.6 * 0.6);

  const FuzzySet q = make_set(u, {{"e", 0.25}});
  CHECK(apply_hedge(q, Hedge::MoreOrLess).at("e").value() == 0.5);

  const FuzzySet one = make_set(u, {{"e", 1.0}});
  CHECK(apply_hedge(one, Hedge::NotVery).at("e").value() == 0.0);
}

TEST_CASE("most is an alias for very") {
  gen::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto u = gen::universe(rng, 8, "x");
    const FuzzySet a = gen::set(rng, u);
    const FuzzySet very = apply_hedge(a, Hedge::Very);
    const FuzzySet most = apply_hedge(a, Hedge::Most);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(very[k] == most[k]);
  }
}

TEST_CASE("algebraic laws hold on random sets") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto u = gen::universe(rng, 8, "x");
    const FuzzySet a = gen::set(rng, u);
    const FuzzySet b = gen::set(rng, u);
    const FuzzySet c = gen::set(rng, u);

    for (std::size_t k = 0; k < u->size(); ++k) {
      // de Morgan, exact for min/max
      CHECK(negate(combine(a, b, Connective::And))[k] ==
            combine(negate(a), negate(b), Connective::Or)[k]);
      // involution within one rounding unit
      CHECK(std::abs(negate(negate(a))[k].value() - a[k].value()) <= 1e-12);
      // lattice laws
      CHECK(combine(a, a, Connective::And)[k] == a[k]);
      CHECK(combine(a, a, Connective::Or)[k] == a[k]);
      CHECK(combine(a, b, Connective::And)[k] == combine(b, a, Connective::And)[k]);
      CHECK(combine(a, b, Connective::Or)[k] == combine(b, a, Connective::Or)[k]);
      CHECK(combine(combine(a, b, Connective::And), c, Connective::And)[k] ==
            combine(a, combine(b, c, Connective::And), Connective::And)[k]);
      CHECK(combine(combine(a, b, Connective::Or), c, Connective::Or)[k] ==
            combine(a, combine(b, c, Connective::Or), Connective::Or)[k]);
      // implication is definitionally OR(NOT a, b)
      CHECK(combine(a, b, Connective::Implies)[k] ==
            combine(negate(a), b, Connective::Or)[k]);
      // hedge ordering
      CHECK(apply_hedge(a, Hedge::Very)[k] <= a[k]);
      CHECK(a[k] <= apply_hedge(a, Hedge::MoreOrLess)[k]);
    }
  }
}

TEST_CASE("operations stay inside the unit interval") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto u = gen::universe(rng, 8, "x");
    const FuzzySet a = gen::set(rng, u);
    const FuzzySet b = gen::set(rng, u);
    // Grade construction inside each operation already rejects escapes; this
    // re-checks the results explicitly.
    for (const FuzzySet& s :
         {combine(a, b, Connective::And), combine(a, b, Connective::Or),
          combine(a, b, Connective::Implies), negate(a), apply_hedge(a, Hedge::Very),
          apply_hedge(a, Hedge::MoreOrLess), apply_hedge(a, Hedge::NotVery)}) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s[k].value() >= 0.0);
        CHECK(s[k].value() <= 1.0);
      }
    }
  }
}
