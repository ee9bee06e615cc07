#include "chaingame/arena.hpp"

#include <algorithm>

namespace chaingame {

std::string_view actor_name(Actor actor) {
  switch (actor) {
    case Actor::Spoiler: return "spoiler";
    case Actor::Algorithm: return "algorithm";
    case Actor::Done: return "done";
  }
  return "done";
}

std::string_view human_role_name(HumanRole role) {
  switch (role) {
    case HumanRole::None: return "none";
    case HumanRole::Algorithm: return "algorithm";
    case HumanRole::Spoiler: return "spoiler";
  }
  return "none";
}

HumanRole parse_human_role(std::string_view text) {
  if (text == "none") return HumanRole::None;
  if (text == "algorithm") return HumanRole::Algorithm;
  if (text == "spoiler") return HumanRole::Spoiler;
  throw Error(Errc::InvalidArgument, "unknown human role '" + std::string(text) + "'");
}

std::size_t default_random_points(const GameConfig& config) {
  return config.points.value_or(static_cast<std::size_t>(10 * config.w));
}

std::size_t default_max_points(const GameConfig& config) {
  const auto k = static_cast<std::size_t>(std::max(solve_ik(config.w).k(), 0));
  const auto w = static_cast<std::size_t>(config.w);
  std::size_t cap = 10 * w * (k + 2) + 2 * w;
  if (config.spoiler == "random") cap = std::max(cap, default_random_points(config));
  return cap;
}

PointId referee_present(SemiOrder& order, Mode mode, std::uint64_t w, const PointSet& down,
                        const PointSet& up) {
  if (mode == Mode::UpGrowing && !up.empty()) {
    throw Error(Errc::NotMaximal, "up-growing games only accept maximal points", up.ids());
  }
  SemiOrder next = order;
  const PointId id = next.add_point(down, up);
  const std::size_t width = next.width();
  if (width > w) {
    throw Error(Errc::WidthExceeded, "presentation raises the width to " + std::to_string(width) +
                                         " > " + std::to_string(w));
  }
  order = std::move(next);
  return id;
}

// ---------------------------------------------------------------- session

GameSession::GameSession(GameConfig config, HumanRole human) : human_(human) {
  if (config.w == 0) throw Error(Errc::InvalidArgument, "width must be at least 1");
  if (human == HumanRole::Spoiler) {
    config.spoiler = std::string(kHumanSeat);
  } else {
    spoiler_ = make_spoiler(config.spoiler, config.mode, config.w, config.seed,
                            default_random_points(config));
    if (config.spoiler == "doubler" && config.mode == Mode::UpGrowing) {
      throw Error(Errc::ModeMismatch, "the doubler spoiler presents non-maximal points; use general mode");
    }
  }
  if (human == HumanRole::Algorithm) {
    config.algorithm = std::string(kHumanSeat);
  } else {
    algorithm_ = make_algorithm(config.algorithm, config.seed);
    config.algorithm = canonical_algorithm_name(config.algorithm);
    if (algorithm_->requires_up_growing() && config.mode != Mode::UpGrowing) {
      throw Error(Errc::ModeMismatch, "algorithm '" + config.algorithm + "' requires up-growing mode");
    }
  }
  max_points_ = config.max_points.value_or(config.spoiler == kHumanSeat
                                               ? 10 * static_cast<std::size_t>(config.w) *
                                                     (static_cast<std::size_t>(std::max(solve_ik(config.w).k(), 0)) + 2) +
                                                     2 * static_cast<std::size_t>(config.w)
                                               : default_max_points(config));
  transcript_.config = std::move(config);
}

bool GameSession::human_to_move() const {
  return (next_ == Actor::Spoiler && human_ == HumanRole::Spoiler) ||
         (next_ == Actor::Algorithm && human_ == HumanRole::Algorithm);
}

void GameSession::require_turn(Actor actor, bool human) const {
  if (next_ == Actor::Done) throw Error(Errc::GameOver, "the game is over");
  if (next_ != actor || human_to_move() != human) {
    throw Error(Errc::NotYourTurn, std::string("it is the ") + std::string(actor_name(next_)) +
                                       (human_to_move() ? " (human)" : " (automated)") + "'s turn");
  }
}

std::optional<PointId> GameSession::pending_point() const {
  if (next_ != Actor::Algorithm) return std::nullopt;
  return order_.size() - 1;
}

std::vector<ChainId> GameSession::pending_valid_chains() const {
  const auto p = pending_point();
  if (!p) return {};
  return partition_.valid_chains(order_, *p);
}

void GameSession::apply_present(const PointSet& down, const PointSet& up) {
  if (order_.size() >= max_points_) {
    throw Error(Errc::PointCapExceeded, "point cap of " + std::to_string(max_points_) + " reached");
  }
  const PointId id = referee_present(order_, transcript_.config.mode, transcript_.config.w, down, up);
  transcript_.events.emplace_back(PresentEvent{id, down.ids(), up.ids()});
  next_ = Actor::Algorithm;
}

ChainId GameSession::apply_assign(ChainChoice choice) {
  const PointId p = order_.size() - 1;
  const ChainId c = partition_.assign(order_, p, choice);
  transcript_.events.emplace_back(AssignEvent{p, c});
  transcript_.chains_used = partition_.chain_count();
  last_reply_ = Assignment{p, c};
  next_ = Actor::Spoiler;
  return c;
}

void GameSession::record_fault(Outcome outcome, const Error& error) {
  transcript_.outcome = outcome;
  transcript_.fault = Fault{transcript_.events.size(), error.code(), error.what(), error.witness()};
  next_ = Actor::Done;
}

void GameSession::step() {
  require_turn(next_ == Actor::Done ? Actor::Spoiler : next_, false);
  if (next_ == Actor::Spoiler) {
    SpoilerMove move;
    try {
      move = spoiler_->next(last_reply_);
    } catch (const Error& e) {
      record_fault(Outcome::SpoilerFault, e);
      return;
    }
    if (move.done) {
      transcript_.outcome = Outcome::Completed;
      next_ = Actor::Done;
      return;
    }
    try {
      apply_present(move.down, move.up);
    } catch (const Error& e) {
      if (e.code() == Errc::PointCapExceeded) throw;
      record_fault(Outcome::SpoilerFault, e);
    }
    return;
  }
  try {
    const PointId p = order_.size() - 1;
    apply_assign(algorithm_->choose(order_, partition_, p));
  } catch (const Error& e) {
    record_fault(Outcome::AlgorithmFault, e);
  }
}

void GameSession::run_automated() {
  while (next_ != Actor::Done && !human_to_move()) step();
}

ChainId GameSession::human_assign(ChainChoice choice) {
  require_turn(Actor::Algorithm, true);
  return apply_assign(choice);
}

PointId GameSession::human_present(const PointSet& down, const PointSet& up) {
  require_turn(Actor::Spoiler, true);
  apply_present(down, up);
  return order_.size() - 1;
}

void GameSession::stop() {
  require_turn(Actor::Spoiler, true);
  transcript_.outcome = Outcome::Completed;
  next_ = Actor::Done;
}

Transcript run_game(const GameConfig& config) {
  GameSession session(config);
  session.run_automated();
  return session.transcript();
}

// ----------------------------------------------------------------- replay

OrderedJson verdict_to_json(const Verdict& v) {
  OrderedJson j;
  j["ok"] = v.ok;
  j["outcome"] = outcome_name(v.outcome);
  if (v.event_index) j["event_index"] = *v.event_index;
  if (!v.code.empty()) j["code"] = v.code;
  if (!v.message.empty()) j["message"] = v.message;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

namespace {

struct ReplayFailure {
  Outcome outcome;
  std::size_t index;
  Error error;
};

// Applies events [0, limit); returns the first failure.
std::optional<ReplayFailure> apply_events(const Transcript& t, std::size_t limit, SemiOrder& order,
                                          ChainPartition& partition) {
  std::optional<PointId> pending;
  for (std::size_t i = 0; i < limit; ++i) {
    const Event& event = t.events[i];
    if (const auto* p = std::get_if<PresentEvent>(&event)) {
      try {
        if (pending) throw Error(Errc::NotYourTurn, "present while point " + std::to_string(*pending) + " is unassigned");
        if (p->id != order.size()) throw Error(Errc::UnknownPoint, "point ids must be dense");
        referee_present(order, t.config.mode, t.config.w, PointSet::of(p->down), PointSet::of(p->up));
        pending = p->id;
      } catch (const Error& e) {
        return ReplayFailure{Outcome::SpoilerFault, i, e};
      }
    } else {
      const auto& a = std::get<AssignEvent>(event);
      try {
        if (!pending || *pending != a.id) {
          throw Error(Errc::NotYourTurn, "assign does not answer the pending presentation");
        }
        if (a.chain > partition.chain_count()) {
          throw Error(Errc::InvalidChain, "chain " + std::to_string(a.chain) + " does not exist");
        }
        const ChainChoice choice =
            a.chain == partition.chain_count() ? ChainChoice::fresh() : ChainChoice::existing(a.chain);
        partition.assign(order, a.id, choice);
        pending.reset();
      } catch (const Error& e) {
        return ReplayFailure{Outcome::AlgorithmFault, i, e};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict replay(const Transcript& t) {
  Verdict v;
  SemiOrder order;
  ChainPartition partition;
  if (t.config.w == 0) {
    v.ok = false;
    v.outcome = Outcome::SpoilerFault;
    v.code = errc_name(Errc::InvalidArgument);
    v.message = "width must be at least 1";
    return v;
  }
  if (auto failure = apply_events(t, t.events.size(), order, partition)) {
    v.ok = false;
    v.outcome = failure->outcome;
    v.event_index = failure->index;
    v.code = errc_name(failure->error.code());
    v.message = failure->error.what();
    v.witness = failure->error.witness();
    return v;
  }
  const bool dangling = !t.events.empty() && std::holds_alternative<PresentEvent>(t.events.back());
  if (dangling && t.outcome == Outcome::Completed) {
    v.ok = false;
    v.outcome = Outcome::AlgorithmFault;
    v.event_index = t.events.size();
    v.code = "missing_assignment";
    v.message = "completed game ends with an unanswered presentation";
    return v;
  }
  if (partition.chain_count() != t.chains_used) {
    v.ok = false;
    v.outcome = Outcome::AlgorithmFault;
    v.code = "chains_used_mismatch";
    v.message = "recorded chains_used " + std::to_string(t.chains_used) + " but replay uses " +
                std::to_string(partition.chain_count());
    return v;
  }
  v.outcome = t.outcome;
  return v;
}

ReplayedGame rebuild(const Transcript& transcript, std::optional<std::size_t> prefix) {
  ReplayedGame game;
  const std::size_t limit = std::min(prefix.value_or(transcript.events.size()), transcript.events.size());
  if (auto failure = apply_events(transcript, limit, game.order, game.partition)) {
    throw failure->error;
  }
  return game;
}

}  // namespace chaingame
