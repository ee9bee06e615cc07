#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chaingame/algorithms.hpp"
#include "chaingame/chain_partition.hpp"
#include "chaingame/semi_order.hpp"
#include "chaingame/spoilers.hpp"
#include "chaingame/transcript.hpp"

namespace chaingame {

enum class Actor { Spoiler, Algorithm, Done };
enum class HumanRole { None, Algorithm, Spoiler };

std::string_view actor_name(Actor actor);
std::string_view human_role_name(HumanRole role);
HumanRole parse_human_role(std::string_view text);

/// Name used in a config for a seat taken by a person.
inline constexpr std::string_view kHumanSeat = "human";

/// 10 w (k + 2) + 2 w with k from the golden solution, raised to the
/// requested point count for the random spoiler.
std::size_t default_max_points(const GameConfig& config);

/// Points requested from the random spoiler when the config leaves it open.
std::size_t default_random_points(const GameConfig& config);

/// Referee check for one presentation: relation sets, semi-order axioms,
/// maximality in up-growing mode, and width at most w. Mutates `order`
/// only on success.
PointId referee_present(SemiOrder& order, Mode mode, std::uint64_t w, const PointSet& down,
                        const PointSet& up);

/// Live game. Every move, automated or human, goes through the referee.
class GameSession {
 public:
  /// Throws UnknownStrategy or ModeMismatch for unusable configurations.
  explicit GameSession(GameConfig config, HumanRole human = HumanRole::None);

  GameSession(GameSession&&) noexcept = default;
  GameSession& operator=(GameSession&&) noexcept = default;

  Actor next_actor() const { return next_; }
  HumanRole human_role() const { return human_; }
  bool human_to_move() const;

  /// Advances the automated seat by one half-move. Faults of automated
  /// players end the game and are recorded in the transcript.
  /// Throws NotYourTurn, GameOver or PointCapExceeded.
  void step();
  /// Steps until the game ends or a human is to move.
  void run_automated();

  /// Human Algorithm move; returns the chain used. Rejections leave the
  /// session unchanged.
  ChainId human_assign(ChainChoice choice);
  /// Human Spoiler move; returns the new point id.
  PointId human_present(const PointSet& down, const PointSet& up);
  /// Spoiler ends the game (human Spoiler only).
  void stop();

  const GameConfig& config() const { return transcript_.config; }
  const Transcript& transcript() const { return transcript_; }
  const SemiOrder& order() const { return order_; }
  const ChainPartition& partition() const { return partition_; }
  std::size_t max_points() const { return max_points_; }

  /// The presented point awaiting an assignment, if any.
  std::optional<PointId> pending_point() const;
  std::vector<ChainId> pending_valid_chains() const;

 private:
  void apply_present(const PointSet& down, const PointSet& up);
  ChainId apply_assign(ChainChoice choice);
  void record_fault(Outcome outcome, const Error& error);
  void require_turn(Actor actor, bool human) const;

  Transcript transcript_;
  HumanRole human_;
  std::unique_ptr<Spoiler> spoiler_;
  std::unique_ptr<OnlineAlgorithm> algorithm_;
  SemiOrder order_;
  ChainPartition partition_;
  std::optional<Assignment> last_reply_;
  Actor next_ = Actor::Spoiler;
  std::size_t max_points_ = 0;
};

/// Plays the configured spoiler against the configured algorithm.
Transcript run_game(const GameConfig& config);

struct Verdict {
  bool ok = true;
  Outcome outcome = Outcome::Completed;
  std::optional<std::size_t> event_index;
  std::string code;
  std::string message;
  std::vector<PointId> witness;
};

OrderedJson verdict_to_json(const Verdict& v);

/// Re-runs every referee check over the recorded events. Never throws.
Verdict replay(const Transcript& transcript);

/// Order and partition reconstructed from the first `prefix` events (all
/// by default). Throws the referee's Error on an invalid event.
struct ReplayedGame {
  SemiOrder order;
  ChainPartition partition;
};
ReplayedGame rebuild(const Transcript& transcript, std::optional<std::size_t> prefix = std::nullopt);

}  // namespace chaingame
