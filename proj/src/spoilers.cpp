#include "chaingame/spoilers.hpp"

#include <algorithm>
#include <sstream>

namespace chaingame {

std::string_view mode_name(Mode mode) { return mode == Mode::UpGrowing ? "up_growing" : "general"; }

Mode parse_mode(std::string_view text) {
  if (text == "up_growing" || text == "up-growing") return Mode::UpGrowing;
  if (text == "general") return Mode::General;
  throw Error(Errc::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

namespace {

void append_set(std::ostringstream& out, const PointSet& s) {
  out << '{';
  s.for_each([&](PointId p) { out << p << ','; });
  out << '}';
}

void check_reply(std::size_t presented, const std::optional<Assignment>& last, std::size_t chains) {
  if (presented == 0) {
    if (last) throw Error(Errc::InconsistentReply, "reply received before any presentation");
    return;
  }
  if (!last || last->point + 1 != presented) {
    throw Error(Errc::InconsistentReply, "reply does not reference the point just presented");
  }
  if (last->chain > chains) {
    throw Error(Errc::InconsistentReply, "reply names chain " + std::to_string(last->chain) +
                                             " but only " + std::to_string(chains) + " exist");
  }
}

}  // namespace

// ---------------------------------------------------------------- golden

GoldenSpoiler::GoldenSpoiler(std::uint64_t w) : solution_(solve_ik(w)), w_(w) {
  const std::size_t k1 = phases();
  b_points_.resize(k1 + 1);
  b_down_.resize(k1 + 1);
  c_points_.resize(k1);
  d_sets_.resize(k1 + 1);
  skip_bottoms_.resize(k1);
}

PointSet GoldenSpoiler::below_bundles(std::size_t upto) const {
  PointSet s = a_set_;
  for (std::size_t i = 1; i <= upto; ++i) s |= PointSet::of(b_points_[i]);
  return s;
}

SpoilerMove GoldenSpoiler::emit(Role role, PointSet down, int bundle) {
  const PointId id = presented_++;
  last_role_ = role;
  switch (role) {
    case Role::A:
      a_points_.push_back(id);
      a_set_.insert(id);
      bundle_of_.push_back(0);
      break;
    case Role::PathPoint:
      c_points_[phase_].push_back(id);
      bundle_of_.push_back(-1);
      break;
    case Role::Bundle:
      b_points_[static_cast<std::size_t>(bundle)].push_back(id);
      bundle_of_.push_back(bundle);
      break;
  }
  return SpoilerMove::present(std::move(down));
}

void GoldenSpoiler::absorb(const Assignment& reply) {
  std::optional<PointId> previous_top;
  if (reply.chain < chain_tops_.size()) {
    previous_top = chain_tops_[reply.chain];
    chain_tops_[reply.chain] = reply.point;
  } else {
    chain_tops_.push_back(reply.point);
  }
  if (last_role_ != Role::PathPoint) return;

  if (!previous_top || bundle_of_[*previous_top] == 0) {
    // Path ends: a new chain, or a skip chain from A.
    if (previous_top) skip_bottoms_[phase_].insert(*previous_top);
    ++paths_done_;
    path_length_ = 0;
    return;
  }
  const int s = bundle_of_[*previous_top];
  if (s < 0) {
    throw Error(Errc::InternalStrategy, "path point placed on a chain topped by another path point");
  }
  d_sets_[static_cast<std::size_t>(s)].insert(*previous_top);
  if (++path_length_ > static_cast<std::uint64_t>(solution_.k() + 2)) {
    throw Error(Errc::InternalStrategy, "forcing path exceeded its length bound");
  }
  pending_continuation_ = below_bundles(static_cast<std::size_t>(s) - 1) | d_sets_[static_cast<std::size_t>(s)];
}

SpoilerMove GoldenSpoiler::advance() {
  if (pending_continuation_) {
    PointSet down = std::move(*pending_continuation_);
    pending_continuation_.reset();
    return emit(Role::PathPoint, std::move(down), -1);
  }
  while (true) {
    switch (stage_) {
      case Stage::Antichain:
        if (a_points_.size() < w_) return emit(Role::A, {}, 0);
        stage_ = phases() == 0 ? Stage::Finished : Stage::Paths;
        phase_ = 0;
        paths_done_ = 0;
        break;
      case Stage::Paths:
        if (paths_done_ < phase_size(phase_)) {
          path_length_ = 1;
          return emit(Role::PathPoint, below_bundles(phase_), -1);
        }
        start_bundle();
        stage_ = Stage::Bundle;
        break;
      case Stage::Bundle:
        if (bundle_emitted_ < phase_size(phase_)) {
          ++bundle_emitted_;
          const int s = static_cast<int>(phase_) + 1;
          return emit(Role::Bundle, b_down_[phase_ + 1], s);
        }
        ++phase_;
        paths_done_ = 0;
        stage_ = phase_ >= phases() ? Stage::Finished : Stage::Paths;
        break;
      case Stage::Finished:
        return SpoilerMove::finish();
    }
  }
}

void GoldenSpoiler::start_bundle() {
  // B_{j+1} down-set: A_j and B_j's down-set, topped up with the lowest
  // remaining points of A to size x_0 - x_{j+1}.
  const std::size_t j = phase_;
  PointSet s = skip_bottoms_[j] | b_down_[j];
  const std::uint64_t target = solution_.xs[0] - solution_.xs[j + 1];
  if (s.count() > target) {
    throw Error(Errc::InternalStrategy, "bundle down-set exceeds its prescribed size");
  }
  for (PointId a : a_points_) {
    if (s.count() >= target) break;
    s.insert(a);
  }
  b_down_[j + 1] = std::move(s);
  bundle_emitted_ = 0;
}

SpoilerMove GoldenSpoiler::next(std::optional<Assignment> last) {
  check_reply(presented_, last, chain_tops_.size());
  if (last) absorb(*last);
  return advance();
}

std::string GoldenSpoiler::state_key() const {
  std::ostringstream out;
  out << presented_ << '|' << static_cast<int>(stage_) << '|' << static_cast<int>(last_role_) << '|'
      << phase_ << '|' << paths_done_ << '|' << path_length_ << '|' << bundle_emitted_ << '|';
  if (pending_continuation_) append_set(out, *pending_continuation_);
  out << '|';
  for (int b : bundle_of_) out << b << ',';
  out << '|';
  for (const auto& d : d_sets_) append_set(out, d);
  out << '|';
  for (const auto& a : skip_bottoms_) append_set(out, a);
  out << '|';
  for (const auto& b : b_down_) append_set(out, b);
  return out.str();
}

// --------------------------------------------------------------- doubler

DoublerSpoiler::DoublerSpoiler(std::uint64_t w) : w_(w) {
  if (w == 0) throw Error(Errc::InvalidArgument, "width must be at least 1");
}

SpoilerMove DoublerSpoiler::next(std::optional<Assignment> last) {
  check_reply(presented_, last, chain_count_);
  if (last) {
    chain_of_.push_back(last->chain);
    chain_count_ = std::max(chain_count_, last->chain + 1);
  }
  if (finished_) return SpoilerMove::finish();

  if (presented_ < w_) {
    ++presented_;
    return SpoilerMove::present({});
  }
  if (presented_ < 2 * w_) {
    ++presented_;
    return SpoilerMove::present(PointSet::prefix(w_));
  }
  if (!pairs_ready_) {
    pairs_ready_ = true;
    if (chain_count_ >= 2 * w_ - 1) {
      finished_ = true;
      return SpoilerMove::finish();
    }
    std::vector<std::optional<PointId>> a_on(chain_count_), b_on(chain_count_);
    for (PointId p = 0; p < 2 * w_; ++p) {
      auto& slot = p < w_ ? a_on[chain_of_[p]] : b_on[chain_of_[p]];
      if (slot) throw Error(Errc::InternalStrategy, "antichain points share a chain");
      slot = p;
    }
    for (ChainId c = 0; c < chain_count_; ++c) {
      if (a_on[c] && b_on[c]) pairs_.emplace_back(*a_on[c], *b_on[c]);
    }
  }
  const std::size_t k = pairs_.size();
  if (next_x_ < k) {
    const std::size_t i = next_x_++;
    PointSet down, up;
    for (std::size_t t = 0; t < i; ++t) down.insert(pairs_[t].first);
    for (std::size_t t = i; t < k; ++t) up.insert(pairs_[t].second);
    ++presented_;
    return SpoilerMove::present(std::move(down), std::move(up));
  }
  finished_ = true;
  return SpoilerMove::finish();
}

std::string DoublerSpoiler::state_key() const {
  std::ostringstream out;
  out << presented_ << '|' << pairs_ready_ << '|' << next_x_ << '|' << finished_ << '|';
  for (ChainId c : chain_of_) out << c << ',';
  return out.str();
}

// ---------------------------------------------------------------- random

RandomSpoiler::RandomSpoiler(Mode mode, std::uint64_t w, std::size_t n_target, std::uint64_t seed)
    : mode_(mode), w_(w), n_target_(n_target) {
  if (w == 0) throw Error(Errc::InvalidArgument, "width must be at least 1");
  std::mt19937_64 gen(seed);
  const std::int64_t max_step = std::uniform_int_distribution<std::int64_t>(1, 2 * kGrid)(gen);
  std::uniform_int_distribution<std::int64_t> step(0, max_step);

  // Non-decreasing endpoints; a candidate is resampled while the new
  // interval would overlap w or more earlier ones.
  std::vector<std::int64_t> left;
  left.reserve(n_target);
  for (std::size_t i = 0; i < n_target; ++i) {
    const std::int64_t base = left.empty() ? 0 : left.back();
    std::int64_t candidate = base;
    while (true) {
      candidate = base + step(gen);
      const auto overlapping = static_cast<std::uint64_t>(std::count_if(
          left.begin(), left.end(), [&](std::int64_t l) { return l >= candidate - kGrid; }));
      if (overlapping + 1 <= w_) break;
      if (max_step <= kGrid) {
        // Small steps may never escape a dense cluster; jump past it.
        candidate = base + kGrid + 1;
        break;
      }
    }
    left.push_back(candidate);
  }
  if (mode_ == Mode::General) std::shuffle(left.begin(), left.end(), gen);
  planned_left_ = std::move(left);
}

SpoilerMove RandomSpoiler::next(std::optional<Assignment> /*last*/) {
  const std::size_t i = presented_left_.size();
  if (i >= n_target_) return SpoilerMove::finish();
  const std::int64_t l = planned_left_[i];
  PointSet down, up;
  for (PointId p = 0; p < i; ++p) {
    if (presented_left_[p] + kGrid < l) down.insert(p);
    if (l + kGrid < presented_left_[p]) up.insert(p);
  }
  presented_left_.push_back(l);
  return SpoilerMove::present(std::move(down), std::move(up));
}

std::string RandomSpoiler::state_key() const { return std::to_string(presented_left_.size()); }

// --------------------------------------------------------------- factory

std::unique_ptr<Spoiler> make_spoiler(std::string_view name, Mode mode, std::uint64_t w,
                                      std::uint64_t seed, std::size_t n_target) {
  if (w == 0) throw Error(Errc::InvalidArgument, "width must be at least 1");
  if (name == "golden") return std::make_unique<GoldenSpoiler>(w);
  if (name == "doubler") return std::make_unique<DoublerSpoiler>(w);
  if (name == "random") return std::make_unique<RandomSpoiler>(mode, w, n_target, seed);
  throw Error(Errc::UnknownStrategy, "unknown spoiler '" + std::string(name) + "'");
}

std::vector<std::string> spoiler_names() { return {"golden", "doubler", "random"}; }

}  // namespace chaingame
