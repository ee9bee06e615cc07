#include <random>

#include "chaingame/algorithms.hpp"
#include "chaingame/chain_partition.hpp"
#include "chaingame/game_value.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chaingame;

namespace {

// a, b, c minimal; d above a, b; e above a, b, c. Chains [a, d], [b], [c]
// before e arrives.
struct NaturalState {
  SemiOrder order;
  ChainPartition partition;
  PointId e = 4;

  NaturalState() {
    order.add_point({});
    order.add_point({});
    order.add_point({});
    order.add_point({0, 1});
    partition.assign(order, 0, ChainChoice::fresh());
    partition.assign(order, 1, ChainChoice::fresh());
    partition.assign(order, 2, ChainChoice::fresh());
    partition.assign(order, 3, ChainChoice::existing(0));
    order.add_point({0, 1, 2});
  }
};

}  // namespace

TEST_CASE("valid chains for e are the chains of b and c") {
  NaturalState s;
  CHECK(s.partition.valid_chains(s.order, s.e) == std::vector<ChainId>{1, 2});
}

TEST_CASE("empty partition has no valid chain") {
  SemiOrder o;
  o.add_point({});
  CHECK(ChainPartition{}.valid_chains(o, 0).empty());
}

TEST_CASE("a point above everything may extend every chain") {
  SemiOrder o;
  ChainPartition part;
  for (PointId p = 0; p < 3; ++p) {
    o.add_point({});
    part.assign(o, p, ChainChoice::fresh());
  }
  o.add_point({0, 1, 2});
  CHECK(part.valid_chains(o, 3) == std::vector<ChainId>{0, 1, 2});
}

TEST_CASE("ALG prefers the top with the smaller up-set") {
  NaturalState s;
  CHECK(alg_choose(s.order, s.partition, s.e) == ChainChoice::existing(2));
}

TEST_CASE("first-fit takes the smallest valid id") {
  NaturalState s;
  CHECK(first_fit_choose(s.order, s.partition, s.e) == ChainChoice::existing(1));
}

TEST_CASE("greedy algorithms open a chain only when forced") {
  SemiOrder o;
  o.add_point({});
  ChainPartition part;
  CHECK(alg_choose(o, part, 0).is_new());
  CHECK(first_fit_choose(o, part, 0).is_new());
  CHECK(random_greedy_choose(o, part, 0, 3).is_new());
  CHECK(random_valid_choose(o, part, 0, 3).is_new());
}

TEST_CASE("first-fit returns chain 0 when all are valid") {
  SemiOrder o;
  ChainPartition part;
  o.add_point({});
  part.assign(o, 0, ChainChoice::fresh());
  o.add_point({});
  part.assign(o, 1, ChainChoice::fresh());
  o.add_point({0, 1});
  CHECK(first_fit_choose(o, part, 2) == ChainChoice::existing(0));
}

TEST_CASE("ALG breaks up-set ties by chain id") {
  // Five minimal points on chains 0..4; the new point covers 1 and 4 only.
  SemiOrder o;
  ChainPartition part;
  for (PointId p = 0; p < 5; ++p) {
    o.add_point({});
    part.assign(o, p, ChainChoice::fresh());
  }
  o.add_point({1, 4});
  CHECK(alg_choose(o, part, 5) == ChainChoice::existing(1));
}

TEST_CASE("ALG rejects points that are not maximal") {
  SemiOrder o;
  o.add_point({});
  o.add_point({}, {0});
  ChainPartition part;
  part.assign(o, 0, ChainChoice::fresh());
  try {
    alg_choose(o, part, 1);
    FAIL("expected NotMaximal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMaximal);
  }
}

TEST_CASE("random choice is one of the options and repeatable") {
  NaturalState s;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ChainChoice c = random_valid_choose(s.order, s.partition, s.e, seed);
    CHECK((c.is_new() || c.chain() == 1 || c.chain() == 2));
    CHECK(c == random_valid_choose(s.order, s.partition, s.e, seed));
    const ChainChoice g = random_greedy_choose(s.order, s.partition, s.e, seed);
    CHECK_FALSE(g.is_new());
  }
}

TEST_CASE("assign creates chains and extends them") {
  NaturalState s;
  CHECK(s.partition.chain_count() == 3);
  CHECK(s.partition.assign(s.order, s.e, ChainChoice::existing(2)) == 2);
  CHECK(s.partition.chain(2) == std::vector<PointId>{2, 4});
  CHECK(s.partition.top(2) == 4);
  CHECK(s.partition.bottom(2) == 2);
}

TEST_CASE("assign to a chain whose top is beside the point fails") {
  NaturalState s;
  try {
    s.partition.assign(s.order, s.e, ChainChoice::existing(0));
    FAIL("expected InvalidChain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidChain);
  }
  CHECK_FALSE(s.partition.assigned(s.e));
  CHECK_THROWS_AS(s.partition.assign(s.order, s.e, ChainChoice::existing(9)), Error);
}

TEST_CASE("predecessor and successor") {
  NaturalState s;
  CHECK_FALSE(s.partition.predecessor(1).has_value());
  CHECK_FALSE(s.partition.successor(1).has_value());
  CHECK(s.partition.predecessor(3) == PointId{0});
  CHECK(s.partition.successor(0) == PointId{3});
}

TEST_CASE("general-mode insertion keeps chains sorted") {
  SemiOrder o;
  ChainPartition part;
  o.add_point({});
  part.assign(o, 0, ChainChoice::fresh());
  o.add_point({0});
  part.assign(o, 1, ChainChoice::existing(0));
  o.add_point({}, {1});  // below 1, beside 0
  CHECK_FALSE(part.is_valid(o, 0, 2));
  o.add_point({0}, {1});  // between 0 and 1
  CHECK(part.is_valid(o, 0, 3));
  part.assign(o, 3, ChainChoice::existing(0));
  CHECK(part.chain(0) == std::vector<PointId>{0, 3, 1});
  CHECK(part.top(0) == 1);
  CHECK(part.predecessor(1) == PointId{3});
}

TEST_CASE("from_chains validates its input") {
  SemiOrder o;
  o.add_point({});
  o.add_point({});
  CHECK_THROWS_AS(ChainPartition::from_chains(o, {{0, 1}}), Error);
  const ChainPartition p = ChainPartition::from_chains(o, {{1}, {0}});
  CHECK(p.chain_of(1) == ChainId{0});
}

TEST_CASE("property: ALG and first-fit stay greedy on random up-growing orders") {
  std::mt19937_64 rng(21);
  for (int instance = 0; instance < 200; ++instance) {
    const auto sample = testsupport::random_intervals(rng, 1 + rng() % 60, 30, true);
    SemiOrder order;
    ChainPartition alg;
    ChainPartition ff;
    for (std::size_t i = 0; i < sample.left.size(); ++i) {
      auto [down, up] = testsupport::relations_of(sample, i);
      const PointId p = order.add_point(down, up);
      const bool forced = alg.valid_chains(order, p).empty();
      const ChainChoice a = alg_choose(order, alg, p);
      CHECK(a.is_new() == forced);
      alg.assign(order, p, a);
      const bool ff_forced = ff.valid_chains(order, p).empty();
      const ChainChoice f = first_fit_choose(order, ff, p);
      CHECK(f.is_new() == ff_forced);
      ff.assign(order, p, f);
    }
    const std::size_t w = order.width();
    CHECK(alg.chain_count() <= game_value(w));
    CHECK(ff.chain_count() <= 2 * w - 1);
  }
}
