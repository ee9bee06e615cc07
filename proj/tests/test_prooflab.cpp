#include <algorithm>

#include "chaingame/algorithms.hpp"
#include "chaingame/arena.hpp"
#include "chaingame/game_value.hpp"
#include "chaingame/prooflab.hpp"
#include "doctest.h"

using namespace chaingame;
using namespace chaingame::prooflab;

namespace {

Transcript golden_game(std::uint64_t w) {
  GameConfig c;
  c.w = w;
  return run_game(c);
}

// Golden against a person who plays ALG except at half-move `deviate`,
// where `pick` replaces ALG's answer.
Transcript deviating_game(std::uint64_t w, std::size_t deviate, std::size_t pick) {
  GameConfig c;
  c.w = w;
  c.algorithm = kHumanSeat;
  GameSession s(c, HumanRole::Algorithm);
  s.run_automated();
  std::size_t move = 0;
  while (s.next_actor() != Actor::Done) {
    const PointId p = *s.pending_point();
    ChainChoice choice = alg_choose(s.order(), s.partition(), p);
    if (move++ == deviate) {
      const auto valid = s.pending_valid_chains();
      choice = pick < valid.size() ? ChainChoice::existing(valid[pick]) : ChainChoice::fresh();
    }
    s.human_assign(choice);
    s.run_automated();
  }
  return s.transcript();
}

const CheckResult& find(const Report& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("an antichain has no significant points") {
  SemiOrder o;
  for (int i = 0; i < 4; ++i) o.add_point({});
  CHECK(significant_points(o).empty());
  const LayerDecomposition d = layers(o);
  CHECK(d.m() == 1);
  CHECK(d.layer(1) == PointSet{0, 1, 2, 3});
}

TEST_CASE("every point of a chain after the first is significant") {
  SemiOrder o;
  o.add_point({});
  o.add_point({0});
  o.add_point({0, 1});
  CHECK(significant_points(o) == std::vector<PointId>{1, 2});
  const LayerDecomposition d = layers(o);
  REQUIRE(d.m() == 3);
  CHECK(d.layer(1) == PointSet{0});
  CHECK(d.layer(2) == PointSet{1});
  CHECK(d.layer(3) == PointSet{2});
  CHECK(d.layer_of == std::vector<std::size_t>{1, 2, 3});
  CHECK(d.span(2, 3) == PointSet{1, 2});
  CHECK(d.span(3, 2).empty());
}

TEST_CASE("golden w=2 structure") {
  const Analysis a = analyse(golden_game(2));
  CHECK(a.decomposition.significant == std::vector<PointId>{2});
  REQUIRE(a.decomposition.m() == 2);
  CHECK(a.decomposition.layer(1) == PointSet{0, 1});
  CHECK(a.decomposition.layer(2) == PointSet{2, 3});
  REQUIRE(a.paths.size() == 3);
  CHECK(a.paths[0].points == std::vector<PointId>{0});
  CHECK(a.paths[0].kind == PathKind::UpPath);
  CHECK(a.paths[2].points == std::vector<PointId>{3, 0, 2, 1});
  CHECK(a.paths[2].kind == PathKind::DownPath);
  CHECK(a.stats.x_u == 2);
  CHECK(a.stats.end_layers == std::vector<std::size_t>{1});
  CHECK(a.stats.xs == std::vector<std::uint64_t>{1, 0});
  CHECK(check_lemmas(a.stats, 2).all_passed());
}

TEST_CASE("golden games pass every check") {
  for (std::uint64_t w = 1; w <= 10; ++w) {
    const Analysis a = analyse(golden_game(w));
    const Report facts = check_facts(a);
    const Report lemmas = check_lemmas(a.stats, w);
    for (const auto& c : facts.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.passed);
    }
    CHECK(lemmas.all_passed());
    CHECK(a.stats.x_u <= w);
    CHECK(a.stats.x_u + a.stats.x0() == a.chains_used);
    CHECK(a.chains_used == game_value(w));
  }
  const Analysis ten = analyse(golden_game(10));
  CHECK(ten.stats.x0() == 6);
  const Analysis five = analyse(golden_game(5));
  CHECK(five.paths.size() == 8);
}

TEST_CASE("ALG on random up-growing games passes every check") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GameConfig c;
    c.spoiler = "random";
    c.w = 1 + seed % 7;
    c.seed = seed;
    c.points = 40;
    const Analysis a = analyse(run_game(c));
    CHECK(check_facts(a).all_passed());
    CHECK(check_lemmas(a.stats, c.w).all_passed());
    CHECK(a.stats.x_u + a.stats.x0() == a.chains_used);
  }
}

TEST_CASE("analysis stops at the last new chain") {
  const Transcript t = golden_game(2);
  CHECK(analysed_prefix(t) == t.events.size());
  GameConfig c;
  c.w = 1;
  c.spoiler = "random";
  c.points = 6;
  CHECK(analysed_prefix(run_game(c)) == 2);
}

TEST_CASE("a non-ALG choice is caught") {
  std::size_t caught = 0;
  std::size_t tried = 0;
  for (std::size_t deviate = 0; deviate < 20; ++deviate) {
    for (std::size_t pick = 0; pick < 3; ++pick) {
      const Transcript t = deviating_game(5, deviate, pick);
      const Analysis a = analyse(t);
      const Report facts = check_facts(a);
      const CheckResult& greedy = find(facts, "alg_is_greedy");
      const CheckResult& highest = find(facts, "alg_prefers_highest_layer");
      ++tried;
      if (!highest.passed) {
        ++caught;
        CHECK(highest.witness.size() == 3);
      }
      // Opening a chain while one is valid is never greedy.
      if (!greedy.passed) CHECK_FALSE(facts.all_passed());
    }
  }
  CHECK(tried == 60);
  CHECK(caught > 0);
}

TEST_CASE("general-mode games are refused") {
  GameConfig c;
  c.mode = Mode::General;
  c.spoiler = "doubler";
  c.algorithm = "first-fit";
  c.w = 2;
  CHECK_THROWS_AS(analyse(run_game(c)), Error);
}

TEST_CASE("lemma checks flag a bad sequence") {
  PathStatistics s;
  s.x_u = 1;
  s.xs = {3, 0};
  const Report r = check_lemmas(s, 4);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(find(r, "first_down_path_inequality").passed);
}

TEST_CASE("json report layout") {
  const Analysis a = analyse(golden_game(3));
  const auto j = analysis_to_json(a, check_facts(a), check_lemmas(a.stats, 3));
  CHECK(j["passed"] == true);
  CHECK(j["w"] == 3);
  CHECK(j["layers"].size() == a.decomposition.m());
  CHECK(j["facts"]["failures"] == 0);
  CHECK(j["facts"]["checks"].size() == check_facts(a).checks.size());
}
