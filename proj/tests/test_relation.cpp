#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "syad/relation.hpp"

using namespace syad;

TEST_CASE("make_relation fills unlisted pairs with zero") {
  const auto x = make_universe("X", {"x1", "x2"});
  const auto y = make_universe("Y", {"y1", "y2"});
  const FuzzyRelation r = make_relation(x, y, {{"x1", "y2", 0.3}});
  CHECK(r.at("x1", "y1").value() == 0.0);
  CHECK(r.at("x1", "y2").value() == 0.3);
  CHECK(r.at("x2", "y1").value() == 0.0);
  CHECK_THROWS_AS(make_relation(x, y, {{"x1", "y1", 0.1}, {"x1", "y1", 0.2}}),
                  DuplicateElement);
  CHECK_THROWS_AS(make_relation(x, y, {{"zz", "y1", 0.1}}), UnknownElement);
}

TEST_CASE("cartesian product takes the pairwise minimum") {
  const auto x = make_universe("X", {"x1", "x2"});
  const auto y = make_universe("Y", {"y1", "y2"});
  const FuzzySet a = make_set(x, {{"x1", 0.56}, {"x2", 0.6}});
  const FuzzySet b = make_set(y, {{"y1", 0.5}, {"y2", 0.8}});
  const FuzzyRelation p = cartesian_product(a, b);
  CHECK(p.at("x1", "y1").value() == 0.5);
  CHECK(p.at("x1", "y2").value() == 0.56);
  CHECK(p.at("x2", "y1").value() == 0.5);
  CHECK(p.at("x2", "y2").value() == 0.6);
}

TEST_CASE("implication relation is max(1 - a(x), b(y))") {
  const auto x = make_universe("X", {"x1", "x2"});
  const auto y = make_universe("Y", {"y1"});
  const FuzzySet a = make_set(x, {{"x1", 0.56}, {"x2", 0.6}});
  const FuzzySet b = make_set(y, {{"y1", 0.2}});
  const FuzzyRelation r = implication_relation(a, b);
  CHECK(r.at("x1", "y1").value() == 1.0 - 0.56);
  CHECK(r.at("x2", "y1").value() == 1.0 - 0.6);
}

TEST_CASE("set-relation composition on a hand example") {
  const auto x = make_universe("X", {"x1", "x2"});
  const auto y = make_universe("Y", {"y1", "y2"});
  const FuzzySet a = make_set(x, {{"x1", 0.3}, {"x2", 0.9}});
  const FuzzyRelation r =
      make_relation(x, y, {{"x1", "y1", 1.0}, {"x1", "y2", 0.2}, {"x2", "y1", 0.4}, {"x2", "y2", 0.8}});
  const FuzzySet out = compose(a, r);
  CHECK(out.at("y1").value() == 0.4);  // max(min(.3,1), min(.9,.4))
  CHECK(out.at("y2").value() == 0.8);  // max(min(.3,.2), min(.9,.8))
}

TEST_CASE("composition against the identity-like relation") {
  const auto x = make_universe("X", {"x1", "x2", "x3"});
  std::vector<std::tuple<std::string, std::string, double>> diag;
  for (const auto& e : x->elements()) diag.emplace_back(e, e, 1.0);
  const FuzzyRelation id = make_relation(x, x, diag);

  gen::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const FuzzySet a = gen::set(rng, x);
    const FuzzySet out = compose(a, id);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(out[k] == a[k]);
  }
}

TEST_CASE("composition with a zero relation is empty") {
  const auto x = make_universe("X", {"x1", "x2"});
  const auto y = make_universe("Y", {"y1"});
  const FuzzySet a = make_set(x, {{"x1", 1.0}, {"x2", 1.0}});
  const FuzzySet out = compose(a, FuzzyRelation::zeros(x, y));
  CHECK(out.at("y1").value() == 0.0);
}

TEST_CASE("composition requires matching universes") {
  const auto x = make_universe("X", {"x1"});
  const auto y = make_universe("Y", {"y1"});
  const FuzzySet a = make_set(y, {});
  CHECK_THROWS_AS(compose(a, FuzzyRelation::zeros(x, y)), UniverseMismatch);
}

TEST_CASE("random compositions match the brute-force oracle") {
  gen::Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::universe(rng, 6, "x");
    const auto y = gen::universe(rng, 6, "y");
    const FuzzySet a = gen::set(rng, x);
    const FuzzyRelation r = gen::relation(rng, x, y);

    const FuzzySet out = compose(a, r);
    const auto expect = oracle::compose_set_relation(oracle::raw(a), oracle::raw(r));
    REQUIRE(out.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) CHECK(out[k].value() == expect[k]);
  }
}

TEST_CASE("random relation-relation compositions match the oracle") {
  gen::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto x = gen::universe(rng, 5, "x");
    const auto y = gen::universe(rng, 5, "y");
    const auto z = gen::universe(rng, 5, "z");
    const FuzzyRelation r = gen::relation(rng, x, y);
    const FuzzyRelation s = gen::relation(rng, y, z);

    const FuzzyRelation out = compose(r, s);
    const auto expect = oracle::compose_relation_relation(oracle::raw(r), oracle::raw(s));
    for (std::size_t i1 = 0; i1 < x->size(); ++i1)
      for (std::size_t i2 = 0; i2 < z->size(); ++i2)
        CHECK(out.at(i1, i2).value() == expect[i1][i2]);
  }
}

TEST_CASE("random cartesian products and implications match the oracle") {
  gen::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto x = gen::universe(rng, 6, "x");
    const auto y = gen::universe(rng, 6, "y");
    const FuzzySet a = gen::set(rng, x);
    const FuzzySet b = gen::set(rng, y);

    const auto prod = oracle::cartesian_product(oracle::raw(a), oracle::raw(b));
    const auto imp = oracle::implication_relation(oracle::raw(a), oracle::raw(b));
    const FuzzyRelation p = cartesian_product(a, b);
    const FuzzyRelation r = implication_relation(a, b);
    for (std::size_t i1 = 0; i1 < x->size(); ++i1)
      for (std::size_t i2 = 0; i2 < y->size(); ++i2) {
        CHECK(p.at(i1, i2).value() == prod[i1][i2]);
        CHECK(r.at(i1, i2).value() == imp[i1][i2]);
      }
  }
}

TEST_CASE("composing a set with its own cartesian product caps at the set height") {
  // compose(a, a x b)(y) = min(height(a), b(y)) holds exactly under min/max.
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto x = gen::universe(rng, 6, "x");
    const auto y = gen::universe(rng, 6, "y");
    const FuzzySet a = gen::set(rng, x);
    const FuzzySet b = gen::set(rng, y);
    const FuzzySet out = compose(a, cartesian_product(a, b));
    const Grade h = height(a);
    for (std::size_t k = 0; k < out.size(); ++k)
      CHECK(out[k].value() == std::min(h.value(), b[k].value()));
  }
}

TEST_CASE("composition is monotone in the input set") {
  gen::Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto x = gen::universe(rng, 6, "x");
    const auto y = gen::universe(rng, 6, "y");
    const FuzzySet a = gen::set(rng, x);
    const FuzzySet b = gen::set(rng, x);
    const FuzzyRelation r = gen::relation(rng, x, y);
    const FuzzySet lo = compose(combine(a, b, Connective::And), r);
    const FuzzySet hi = compose(combine(a, b, Connective::Or), r);
    for (std::size_t k = 0; k < lo.size(); ++k) {
      CHECK(lo[k] <= compose(a, r)[k]);
      CHECK(compose(a, r)[k] <= hi[k]);
    }
  }
}
