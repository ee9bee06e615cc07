#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chaingame/chain_partition.hpp"

namespace chaingame {

/// ALG: extend the valid chain whose top has the smallest up-set in the
/// current prefix (up-sets of an interval order are nested); a new chain
/// only when nothing is valid. Ties go to the smallest chain id.
/// Throws NotMaximal if p has a non-empty up-set.
ChainChoice alg_choose(const SemiOrder& order, const ChainPartition& partition, PointId p);

/// Smallest valid chain id, else a new chain.
ChainChoice first_fit_choose(const SemiOrder& order, const ChainPartition& partition, PointId p);

/// Uniform over the valid chains plus "new"; deterministic per (p, seed).
ChainChoice random_valid_choose(const SemiOrder& order, const ChainPartition& partition, PointId p,
                                std::uint64_t seed);

/// Uniform over the valid chains, "new" only when forced.
ChainChoice random_greedy_choose(const SemiOrder& order, const ChainPartition& partition, PointId p,
                                 std::uint64_t seed);

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual std::string_view name() const = 0;
  /// Whether the algorithm is only defined for up-growing presentations.
  virtual bool requires_up_growing() const { return false; }
  virtual ChainChoice choose(const SemiOrder& order, const ChainPartition& partition,
                             PointId p) const = 0;
};

/// Known names: "alg", "first-fit" (alias "first_fit"), "random",
/// "random-greedy". Throws UnknownStrategy otherwise.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name, std::uint64_t seed = 0);

/// Canonical spelling of an algorithm name; throws UnknownStrategy.
std::string canonical_algorithm_name(std::string_view name);

std::vector<std::string> algorithm_names();

}  // namespace chaingame
