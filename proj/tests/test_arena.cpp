#include <functional>

#include "chaingame/arena.hpp"
#include "chaingame/game_value.hpp"
#include "doctest.h"

using namespace chaingame;

namespace {

GameConfig golden(std::uint64_t w, std::string algorithm = "alg") {
  GameConfig c;
  c.w = w;
  c.algorithm = std::move(algorithm);
  return c;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

const char* const kGoldenTwo =
    R"({"config":{"mode":"up_growing","w":2,"spoiler":"golden","algorithm":"alg","seed":0},"events":[)"
    R"({"present":{"id":0,"down":[],"up":[]}},{"assign":{"id":0,"chain":0}},)"
    R"({"present":{"id":1,"down":[],"up":[]}},{"assign":{"id":1,"chain":1}},)"
    R"({"present":{"id":2,"down":[0,1],"up":[]}},{"assign":{"id":2,"chain":0}},)"
    R"({"present":{"id":3,"down":[0],"up":[]}},{"assign":{"id":3,"chain":2}}],)"
    R"("chains_used":3,"outcome":"completed"})"
    "\n";

}  // namespace

TEST_CASE("golden against ALG meets the bound") {
  for (std::uint64_t w : {1, 2, 5, 10}) {
    const Transcript t = run_game(golden(w));
    CHECK(t.outcome == Outcome::Completed);
    CHECK(t.chains_used == game_value(w));
  }
}

TEST_CASE("canonical transcript format") {
  const Transcript t = run_game(golden(2));
  CHECK(to_canonical_json(t) == kGoldenTwo);
  const Transcript back = parse_transcript(kGoldenTwo);
  CHECK(to_canonical_json(back) == kGoldenTwo);
  CHECK(back.events == t.events);
}

TEST_CASE("random spoiler config keeps its point count") {
  GameConfig c;
  c.spoiler = "random";
  c.w = 3;
  c.seed = 17;
  c.points = 25;
  const Transcript t = run_game(c);
  CHECK(t.events.size() == 50);
  const Transcript back = parse_transcript(to_canonical_json(t));
  CHECK(back.config.points == std::size_t{25});
  CHECK(to_canonical_json(back) == to_canonical_json(t));
  CHECK(to_canonical_json(run_game(c)) == to_canonical_json(t));
}

TEST_CASE("malformed transcripts are parse errors") {
  CHECK(code_of([] { parse_transcript("{"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_transcript(R"({"config":{}})"); }) == Errc::ParseError);
}

TEST_CASE("replay accepts recorded games") {
  const Verdict v = replay(parse_transcript(kGoldenTwo));
  CHECK(v.ok);
  CHECK(v.outcome == Outcome::Completed);
}

TEST_CASE("replay blames the algorithm for a tampered assignment") {
  Transcript t = parse_transcript(kGoldenTwo);
  std::get<AssignEvent>(t.events[7]).chain = 0;  // chain 0 ends at 2, beside 3
  const Verdict v = replay(t);
  CHECK_FALSE(v.ok);
  CHECK(v.outcome == Outcome::AlgorithmFault);
  CHECK(v.event_index == std::size_t{7});
  CHECK(v.code == "invalid_chain");
}

TEST_CASE("replay blames the spoiler for an injected 3+1") {
  Transcript t;
  t.config = golden(4);
  t.config.mode = Mode::General;
  t.config.spoiler = "doubler";
  t.events = {PresentEvent{0, {}, {}}, AssignEvent{0, 0}, PresentEvent{1, {0}, {}}, AssignEvent{1, 0},
              PresentEvent{2, {0, 1}, {}}, AssignEvent{2, 0}, PresentEvent{3, {}, {}}, AssignEvent{3, 1}};
  t.chains_used = 2;
  t.outcome = Outcome::Completed;
  const Verdict v = replay(t);
  CHECK_FALSE(v.ok);
  CHECK(v.outcome == Outcome::SpoilerFault);
  CHECK(v.event_index == std::size_t{6});
  CHECK(v.code == "three_plus_one");
  CHECK(v.witness.size() == 4);
}

TEST_CASE("replay catches bookkeeping mismatches") {
  Transcript t = parse_transcript(kGoldenTwo);
  t.chains_used = 2;
  CHECK(replay(t).code == "chains_used_mismatch");
  t = parse_transcript(kGoldenTwo);
  t.events.pop_back();
  CHECK(replay(t).code == "missing_assignment");
  t = parse_transcript(kGoldenTwo);
  std::get<PresentEvent>(t.events[2]).id = 5;
  CHECK_FALSE(replay(t).ok);
}

TEST_CASE("referee is neutral: replaying a game rebuilds it") {
  for (const char* spoiler : {"golden", "random"}) {
    for (const char* algorithm : {"alg", "first-fit", "random", "random-greedy"}) {
      for (std::uint64_t w = 1; w <= 6; ++w) {
        GameConfig c = golden(w, algorithm);
        c.spoiler = spoiler;
        c.seed = w * 7;
        const Transcript t = run_game(c);
        REQUIRE(replay(t).ok);
        const ReplayedGame g = rebuild(t);
        CHECK(g.partition.chain_count() == t.chains_used);
        CHECK(g.order.width() <= w);
      }
    }
  }
  for (std::uint64_t w = 1; w <= 6; ++w) {
    GameConfig c = golden(w, "first-fit");
    c.mode = Mode::General;
    c.spoiler = "doubler";
    const Transcript t = run_game(c);
    CHECK(replay(t).ok);
    CHECK(t.chains_used == 2 * w - 1);
  }
}

TEST_CASE("a person playing the algorithm against golden w=2 uses at least 3 chains") {
  // Every line of play, explored by re-running the session with a prefix of choices.
  std::size_t games = 0;
  std::function<void(std::vector<ChainChoice>)> explore = [&](std::vector<ChainChoice> prefix) {
    GameSession s(golden(2, std::string(kHumanSeat)), HumanRole::Algorithm);
    s.run_automated();
    std::size_t used = 0;
    while (s.next_actor() != Actor::Done) {
      REQUIRE(s.human_to_move());
      if (used == prefix.size()) {
        std::vector<ChainChoice> options{ChainChoice::fresh()};
        for (ChainId c : s.pending_valid_chains()) options.push_back(ChainChoice::existing(c));
        for (const auto& option : options) {
          auto next = prefix;
          next.push_back(option);
          explore(next);
        }
        return;
      }
      s.human_assign(prefix[used++]);
      s.run_automated();
    }
    ++games;
    CHECK(s.transcript().chains_used >= 3);
    CHECK(replay(s.transcript()).ok);
  };
  explore({});
  CHECK(games >= 3);
}

TEST_CASE("an invalid human assignment leaves the session unchanged") {
  GameSession s(golden(2, std::string(kHumanSeat)), HumanRole::Algorithm);
  s.run_automated();
  s.human_assign(ChainChoice::fresh());
  s.run_automated();
  const std::size_t events = s.transcript().events.size();
  CHECK(code_of([&] { s.human_assign(ChainChoice::existing(0)); }) == Errc::InvalidChain);
  CHECK(code_of([&] { s.human_assign(ChainChoice::existing(4)); }) == Errc::InvalidChain);
  CHECK(s.transcript().events.size() == events);
  CHECK(s.partition().chain_count() == 1);
  CHECK(s.pending_point() == PointId{1});
  CHECK(s.transcript().outcome == Outcome::InProgress);
}

TEST_CASE("a person playing the spoiler cannot exceed the width") {
  GameConfig c = golden(2);
  c.spoiler = kHumanSeat;
  GameSession s(c, HumanRole::Spoiler);
  s.human_present({}, {});
  s.run_automated();
  s.human_present({}, {});
  s.run_automated();
  CHECK(code_of([&] { s.human_present({}, {}); }) == Errc::WidthExceeded);
  CHECK(s.order().size() == 2);
  CHECK(code_of([&] { s.human_present({}, {0}); }) == Errc::NotMaximal);
  CHECK(code_of([&] { s.human_present({5}, {}); }) == Errc::UnknownPoint);
  s.human_present({0, 1}, {});
  s.run_automated();
  s.stop();
  CHECK(s.next_actor() == Actor::Done);
  CHECK(s.transcript().outcome == Outcome::Completed);
  CHECK(s.transcript().chains_used == 2);
  CHECK(replay(s.transcript()).ok);
}

TEST_CASE("turn order is enforced") {
  GameSession s(golden(2, std::string(kHumanSeat)), HumanRole::Algorithm);
  CHECK(code_of([&] { s.human_assign(ChainChoice::fresh()); }) == Errc::NotYourTurn);
  CHECK(code_of([&] { s.human_present({}, {}); }) == Errc::NotYourTurn);
  CHECK(code_of([&] { s.stop(); }) == Errc::NotYourTurn);
  s.step();
  CHECK(code_of([&] { s.step(); }) == Errc::NotYourTurn);

  GameSession done(golden(1));
  done.run_automated();
  CHECK(done.next_actor() == Actor::Done);
  CHECK(code_of([&] { done.step(); }) == Errc::GameOver);
}

TEST_CASE("unusable configurations are rejected") {
  GameConfig c = golden(2);
  c.spoiler = "doubler";
  CHECK(code_of([&] { GameSession s(c); }) == Errc::ModeMismatch);
  c = golden(2);
  c.mode = Mode::General;
  CHECK(code_of([&] { GameSession s(c); }) == Errc::ModeMismatch);
  c = golden(2, "best");
  CHECK(code_of([&] { GameSession s(c); }) == Errc::UnknownStrategy);
  c = golden(0);
  CHECK(code_of([&] { GameSession s(c); }) == Errc::InvalidArgument);
  CHECK(code_of([] { parse_mode("sideways"); }) == Errc::InvalidArgument);
}

TEST_CASE("point cap stops a runaway game") {
  GameConfig c = golden(3);
  c.max_points = 2;
  GameSession s(c);
  CHECK(code_of([&] { s.run_automated(); }) == Errc::PointCapExceeded);
  CHECK(s.order().size() == 2);
  CHECK(default_max_points(golden(5)) >= game_value(5) * 4);
}

TEST_CASE("fault records survive the canonical form") {
  Transcript t = parse_transcript(kGoldenTwo);
  t.outcome = Outcome::AlgorithmFault;
  t.fault = Fault{7, Errc::InvalidChain, "chain 0 is not valid", {}};
  t.events.pop_back();
  t.chains_used = 2;
  const Transcript back = parse_transcript(to_canonical_json(t));
  REQUIRE(back.fault.has_value());
  CHECK(back.fault->event_index == 7);
  CHECK(back.fault->code == Errc::InvalidChain);
}
