#include <random>

#include "chaingame/oracle.hpp"
#include "chaingame/semi_order.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chaingame;

namespace {

// a, b, c minimal; d above a, b; e above a, b, c.
SemiOrder natural_order() {
  SemiOrder o;
  o.add_point({});
  o.add_point({});
  o.add_point({});
  o.add_point({0, 1});
  o.add_point({0, 1, 2});
  return o;
}

SemiOrder chain_of(std::size_t n) {
  SemiOrder o;
  PointSet below;
  for (std::size_t i = 0; i < n; ++i) {
    o.add_point(below);
    below.insert(i);
  }
  return o;
}

SemiOrder antichain_of(std::size_t n) {
  SemiOrder o;
  for (std::size_t i = 0; i < n; ++i) o.add_point({});
  return o;
}

Errc rejection(SemiOrder& o, const PointSet& down, const PointSet& up = {}) {
  try {
    o.add_point(down, up);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("insertion was accepted");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("add_point assigns dense ids and records relations") {
  SemiOrder o;
  CHECK(o.add_point({}) == 0);
  CHECK(o.add_point({}) == 1);
  CHECK(o.add_point({0}) == 2);
  CHECK(o.less(0, 2));
  CHECK_FALSE(o.comparable(1, 2));
  CHECK(o.up(0) == PointSet{2});
}

TEST_CASE("add_point accepts points below existing ones") {
  SemiOrder o = antichain_of(2);
  o.add_point({}, {0});
  CHECK(o.less(2, 0));
  CHECK(o.down(0) == PointSet{2});
}

TEST_CASE("isolated point next to a 3-chain is a 3+1") {
  SemiOrder o = chain_of(3);
  CHECK(rejection(o, {}) == Errc::ThreePlusOne);
  CHECK(o.size() == 3);
}

TEST_CASE("down-sets not nested give a 2+2") {
  SemiOrder o;
  o.add_point({});
  o.add_point({0});
  o.add_point({});
  CHECK(rejection(o, {2}) == Errc::TwoPlusTwo);
  CHECK(o.size() == 3);
}

TEST_CASE("closure and overlap violations") {
  SemiOrder o = chain_of(2);
  CHECK(rejection(o, {1}) == Errc::NotDownwardClosed);
  CHECK(rejection(o, {}, {0}) == Errc::NotUpwardClosed);
  CHECK(rejection(o, {0}, {0}) == Errc::DownUpOverlap);
  CHECK(rejection(o, {7}) == Errc::UnknownPoint);
  // Above 1 and below 0 would need 1 < 0.
  CHECK(rejection(o, {0, 1}, {0}) == Errc::DownUpOverlap);
}

TEST_CASE("a point above b but beside c is allowed, one above c but beside b is not") {
  SemiOrder o = natural_order();
  SemiOrder q_order = o;
  CHECK_NOTHROW(q_order.add_point({0, 1}));
  CHECK(q_order.interval_representation().represents(q_order));
  CHECK(rejection(o, {2}) == Errc::TwoPlusTwo);
}

TEST_CASE("width") {
  CHECK(antichain_of(5).width() == 5);
  CHECK(chain_of(4).width() == 1);
  CHECK(natural_order().width() == 3);
  CHECK(SemiOrder{}.width() == 0);
}

TEST_CASE("incomparables and maximal points") {
  CHECK(antichain_of(3).incomparables(0) == PointSet{1, 2});
  CHECK(chain_of(2).incomparables(1).empty());
  const SemiOrder o = natural_order();
  CHECK(o.incomparables(3) == PointSet{2, 4});
  CHECK(antichain_of(2).maximal_points() == PointSet{0, 1});
  CHECK(chain_of(2).maximal_points() == PointSet{1});
  CHECK(o.maximal_points() == PointSet{3, 4});
}

TEST_CASE("interval representation of small orders") {
  const IntervalRepresentation chain = chain_of(2).interval_representation();
  REQUIRE(chain.left.size() == 2);
  CHECK(chain.left[0] == Rational::of(0, 1));
  CHECK(chain.left[1] == Rational::of(4, 3));

  const IntervalRepresentation anti = antichain_of(2).interval_representation();
  CHECK(anti.left[0] == Rational::of(0, 1));
  CHECK(anti.left[1] == Rational::of(1, 1));

  CHECK(natural_order().interval_representation().represents(natural_order()));
  CHECK(SemiOrder{}.interval_representation().left.empty());
}

TEST_CASE("rationals are normalized") {
  CHECK(Rational::of(2, 4) == Rational::of(1, 2));
  CHECK(Rational::of(3, -6) == Rational::of(-1, 2));
  CHECK(Rational::of(1, 3) < Rational::of(1, 2));
  CHECK(Rational::of(4, 3).str() == "4/3");
  CHECK(Rational::of(2, 1).str() == "2");
}

TEST_CASE("property: incremental validation agrees with the brute-force scan") {
  std::mt19937_64 rng(11);
  int accepted = 0;
  int rejected = 0;
  for (int instance = 0; instance < 120; ++instance) {
    SemiOrder order;
    const std::size_t target = 1 + rng() % 40;
    while (order.size() < target) {
      const auto [down, up] = testsupport::random_candidate(rng, order);
      const auto relation = testsupport::extended(order, down, up);
      const bool brute_ok = !down.intersects(up) && oracle::brute_is_order(relation) &&
                            !oracle::brute_forbidden(relation).has_value();
      bool engine_ok = true;
      try {
        order.add_point(down, up);
      } catch (const Error&) {
        engine_ok = false;
      }
      REQUIRE(engine_ok == brute_ok);
      ++(engine_ok ? accepted : rejected);
    }
  }
  CHECK(accepted > 500);
  CHECK(rejected > 100);
}

TEST_CASE("property: width matches subset enumeration and Dilworth") {
  std::mt19937_64 rng(5);
  for (int instance = 0; instance < 300; ++instance) {
    const SemiOrder order = testsupport::random_semi_order(rng, rng() % 21, instance % 2 == 0);
    const std::size_t w = order.width();
    CHECK(w == oracle::brute_width(order));
    CHECK(w == oracle::min_chain_partition(order).chain_count());
  }
}

TEST_CASE("property: up-sets are nested whenever down-sets are") {
  std::mt19937_64 rng(6);
  for (int instance = 0; instance < 100; ++instance) {
    const SemiOrder order = testsupport::random_semi_order(rng, 1 + rng() % 40);
    for (PointId p = 0; p < order.size(); ++p) {
      for (PointId q = 0; q < order.size(); ++q) {
        const bool nested = order.up(p).is_subset_of(order.up(q)) || order.up(q).is_subset_of(order.up(p));
        REQUIRE(nested);
      }
    }
  }
}

TEST_CASE("property: interval representation round-trips the relation") {
  std::mt19937_64 rng(7);
  for (int instance = 0; instance < 300; ++instance) {
    const SemiOrder order = testsupport::random_semi_order(rng, rng() % 60, instance % 3 == 0);
    const IntervalRepresentation rep = order.interval_representation();
    REQUIRE(rep.left.size() == order.size());
    CHECK(rep.represents(order));
  }
}
