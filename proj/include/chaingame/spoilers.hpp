#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chaingame/game_value.hpp"
#include "chaingame/point_set.hpp"

namespace chaingame {

enum class Mode { UpGrowing, General };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

/// Algorithm's reply to the most recent presentation. A chain id equal to
/// the number of chains known so far denotes a freshly opened chain.
struct Assignment {
  PointId point = 0;
  ChainId chain = 0;
};

struct SpoilerMove {
  bool done = false;
  PointSet down;
  PointSet up;

  static SpoilerMove finish() { return {true, {}, {}}; }
  static SpoilerMove present(PointSet down, PointSet up = {}) {
    return {false, std::move(down), std::move(up)};
  }
};

/// Adaptive adversary. Each call receives the reply to the previous
/// presentation (absent before the first move) and returns the next move.
class Spoiler {
 public:
  virtual ~Spoiler() = default;
  virtual std::string_view name() const = 0;
  virtual SpoilerMove next(std::optional<Assignment> last) = 0;
  virtual std::unique_ptr<Spoiler> clone() const = 0;
  /// Encodes everything that determines future moves, for transposition
  /// tables. Chain ids are only part of it when uses_chain_identity().
  virtual std::string state_key() const = 0;
  virtual bool uses_chain_identity() const { return false; }
};

/// Up-growing adversary built from the integer solution of the inequality
/// system: an antichain A of size w, then per phase j a set of forcing
/// paths (the points C_j) followed by the bundle B_{j+1}. Forces at least
/// w + x_0 = floor(phi w) chains against any algorithm.
class GoldenSpoiler final : public Spoiler {
 public:
  explicit GoldenSpoiler(std::uint64_t w);

  std::string_view name() const override { return "golden"; }
  SpoilerMove next(std::optional<Assignment> last) override;
  std::unique_ptr<Spoiler> clone() const override { return std::make_unique<GoldenSpoiler>(*this); }
  std::string state_key() const override;

  const IkSolution& solution() const { return solution_; }
  const std::vector<PointId>& antichain() const { return a_points_; }
  /// Points of bundle B_s, s = 1..k+1.
  const std::vector<PointId>& bundle(std::size_t s) const { return b_points_.at(s); }
  /// Common down-set of bundle B_s.
  const PointSet& bundle_down(std::size_t s) const { return b_down_.at(s); }
  /// Forcing-path points of phase j.
  const std::vector<PointId>& path_points(std::size_t j) const { return c_points_.at(j); }
  const PointSet& d_set(std::size_t s) const { return d_sets_.at(s); }
  const PointSet& skip_bottoms(std::size_t j) const { return skip_bottoms_.at(j); }

 private:
  enum class Role { A, PathPoint, Bundle };
  enum class Stage { Antichain, Paths, Bundle, Finished };

  std::size_t phases() const { return solution_.xs.size() - 1; }
  std::uint64_t phase_size(std::size_t j) const { return solution_.xs[j] - solution_.xs[j + 1]; }
  PointSet below_bundles(std::size_t upto) const;  // A and B_1..B_upto
  SpoilerMove emit(Role role, PointSet down, int bundle);
  SpoilerMove advance();
  void absorb(const Assignment& reply);
  void start_bundle();

  IkSolution solution_;
  std::uint64_t w_;

  std::vector<PointId> a_points_;
  PointSet a_set_;
  std::vector<std::vector<PointId>> b_points_;  // index 0 unused
  std::vector<PointSet> b_down_;                // index 0 is the empty set
  std::vector<std::vector<PointId>> c_points_;
  std::vector<PointSet> d_sets_;                // index 0 unused
  std::vector<PointSet> skip_bottoms_;          // A_j per phase
  std::vector<int> bundle_of_;                  // per point: 0 for A, s for B_s, -1 for C
  std::vector<PointId> chain_tops_;             // by chain id, from replies

  std::size_t presented_ = 0;
  Role last_role_ = Role::A;
  Stage stage_ = Stage::Antichain;
  std::size_t phase_ = 0;
  std::uint64_t paths_done_ = 0;
  std::uint64_t path_length_ = 0;
  std::uint64_t bundle_emitted_ = 0;
  std::optional<PointSet> pending_continuation_;
};

/// General-mode adversary forcing 2w - 1 chains: antichains A < B, then
/// points x_i with a_1..a_i below and b_{i+1}..b_k above for the chains
/// shared by A and B.
class DoublerSpoiler final : public Spoiler {
 public:
  explicit DoublerSpoiler(std::uint64_t w);

  std::string_view name() const override { return "doubler"; }
  SpoilerMove next(std::optional<Assignment> last) override;
  std::unique_ptr<Spoiler> clone() const override { return std::make_unique<DoublerSpoiler>(*this); }
  std::string state_key() const override;
  bool uses_chain_identity() const override { return true; }

  /// Shared-chain pairs (a_i, b_i) in increasing chain-id order; filled
  /// once B is answered.
  const std::vector<std::pair<PointId, PointId>>& pairs() const { return pairs_; }

 private:
  std::uint64_t w_;
  std::size_t presented_ = 0;
  std::vector<ChainId> chain_of_;
  std::size_t chain_count_ = 0;
  bool pairs_ready_ = false;
  std::vector<std::pair<PointId, PointId>> pairs_;
  std::size_t next_x_ = 1;
  bool finished_ = false;
};

/// Seeded generator of unit-interval semi-orders with width at most w.
/// Left endpoints lie on a grid of `kGrid` steps per unit length. In
/// up-growing mode points arrive left to right; in general mode the same
/// kind of instance is presented in a random order.
class RandomSpoiler final : public Spoiler {
 public:
  static constexpr std::int64_t kGrid = 4;

  RandomSpoiler(Mode mode, std::uint64_t w, std::size_t n_target, std::uint64_t seed);

  std::string_view name() const override { return "random"; }
  SpoilerMove next(std::optional<Assignment> last) override;
  std::unique_ptr<Spoiler> clone() const override { return std::make_unique<RandomSpoiler>(*this); }
  std::string state_key() const override;

  /// Grid left endpoints of the presented points, by point id.
  const std::vector<std::int64_t>& endpoints() const { return presented_left_; }

 private:
  Mode mode_;
  std::uint64_t w_;
  std::size_t n_target_;
  std::vector<std::int64_t> planned_left_;  // presentation order
  std::vector<std::int64_t> presented_left_;
};

/// Known names: "golden", "doubler", "random". Throws UnknownStrategy.
std::unique_ptr<Spoiler> make_spoiler(std::string_view name, Mode mode, std::uint64_t w,
                                      std::uint64_t seed, std::size_t n_target);

std::vector<std::string> spoiler_names();

}  // namespace chaingame
