#pragma once

#include <optional>
#include <vector>

#include "chaingame/semi_order.hpp"

namespace chaingame {

/// Either an existing chain id or a request for a fresh chain.
class ChainChoice {
 public:
  static ChainChoice fresh() { return ChainChoice(std::nullopt); }
  static ChainChoice existing(ChainId c) { return ChainChoice(c); }

  bool is_new() const { return !chain_.has_value(); }
  ChainId chain() const { return chain_.value(); }

  friend bool operator==(const ChainChoice&, const ChainChoice&) = default;

 private:
  explicit ChainChoice(std::optional<ChainId> c) : chain_(c) {}
  std::optional<ChainId> chain_;
};

/// On-line chain partition: chains keep their members in increasing order
/// and chain ids are dense in creation order.
class ChainPartition {
 public:
  ChainPartition() = default;

  /// Builds a partition from explicit chains, each listed bottom to top.
  /// Throws InvalidChain if a list is not a chain of `order` or points repeat.
  static ChainPartition from_chains(const SemiOrder& order, std::vector<std::vector<PointId>> chains);

  std::size_t chain_count() const { return chains_.size(); }
  const std::vector<PointId>& chain(ChainId c) const { return chains_.at(c); }
  const std::vector<std::vector<PointId>>& chains() const { return chains_; }

  std::optional<ChainId> chain_of(PointId p) const {
    return p < chain_of_.size() ? chain_of_[p] : std::nullopt;
  }
  bool assigned(PointId p) const { return chain_of(p).has_value(); }

  PointId top(ChainId c) const { return chains_.at(c).back(); }
  PointId bottom(ChainId c) const { return chains_.at(c).front(); }
  /// Current tops of all chains, by chain id.
  std::vector<PointId> tops() const;

  std::optional<PointId> predecessor(PointId p) const;
  std::optional<PointId> successor(PointId p) const;

  /// True iff chain c together with p is totally ordered in `order`.
  bool is_valid(const SemiOrder& order, ChainId c, PointId p) const;
  /// Chains that p may legally extend, in increasing id order.
  std::vector<ChainId> valid_chains(const SemiOrder& order, PointId p) const;

  /// Irrevocably places p. Returns the chain id used.
  ChainId assign(const SemiOrder& order, PointId p, ChainChoice choice);

 private:
  std::vector<std::vector<PointId>> chains_;
  std::vector<std::optional<ChainId>> chain_of_;
  std::vector<std::size_t> position_;  // index of each point within its chain
};

}  // namespace chaingame
