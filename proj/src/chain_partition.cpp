#include "chaingame/chain_partition.hpp"

#include <algorithm>
#include <string>

namespace chaingame {

ChainPartition ChainPartition::from_chains(const SemiOrder& order,
                                           std::vector<std::vector<PointId>> chains) {
  ChainPartition part;
  for (auto& members : chains) {
    if (members.empty()) throw Error(Errc::InvalidChain, "empty chain");
    const ChainId c = part.chains_.size();
    part.chains_.emplace_back();
    for (PointId p : members) {
      if (p >= order.size() || part.assigned(p)) {
        throw Error(Errc::InvalidChain, "point " + std::to_string(p) + " is unknown or repeated");
      }
      if (!part.chains_[c].empty() && !order.less(part.chains_[c].back(), p)) {
        throw Error(Errc::InvalidChain, "chain members are not increasing at " + std::to_string(p));
      }
      part.chains_[c].push_back(p);
      if (p >= part.chain_of_.size()) {
        part.chain_of_.resize(p + 1);
        part.position_.resize(p + 1, 0);
      }
      part.chain_of_[p] = c;
      part.position_[p] = part.chains_[c].size() - 1;
    }
  }
  return part;
}

std::vector<PointId> ChainPartition::tops() const {
  std::vector<PointId> out;
  out.reserve(chains_.size());
  for (const auto& c : chains_) out.push_back(c.back());
  return out;
}

std::optional<PointId> ChainPartition::predecessor(PointId p) const {
  const auto c = chain_of(p);
  if (!c) return std::nullopt;
  const std::size_t i = position_[p];
  if (i == 0) return std::nullopt;
  return chains_[*c][i - 1];
}

std::optional<PointId> ChainPartition::successor(PointId p) const {
  const auto c = chain_of(p);
  if (!c) return std::nullopt;
  const std::size_t i = position_[p];
  if (i + 1 >= chains_[*c].size()) return std::nullopt;
  return chains_[*c][i + 1];
}

bool ChainPartition::is_valid(const SemiOrder& order, ChainId c, PointId p) const {
  if (c >= chains_.size()) return false;
  const auto& members = chains_[c];
  // Fast path: p above the top (always the case for up-growing input).
  if (order.less(members.back(), p)) return true;
  return std::all_of(members.begin(), members.end(),
                     [&](PointId q) { return order.comparable(p, q); });
}

std::vector<ChainId> ChainPartition::valid_chains(const SemiOrder& order, PointId p) const {
  std::vector<ChainId> out;
  for (ChainId c = 0; c < chains_.size(); ++c) {
    if (is_valid(order, c, p)) out.push_back(c);
  }
  return out;
}

ChainId ChainPartition::assign(const SemiOrder& order, PointId p, ChainChoice choice) {
  if (p >= order.size()) throw Error(Errc::UnknownPoint, "point " + std::to_string(p) + " does not exist");
  if (assigned(p)) throw Error(Errc::InvalidChain, "point " + std::to_string(p) + " is already assigned");
  if (p >= chain_of_.size()) {
    chain_of_.resize(p + 1);
    position_.resize(p + 1, 0);
  }
  if (choice.is_new()) {
    const ChainId c = chains_.size();
    chains_.push_back({p});
    chain_of_[p] = c;
    position_[p] = 0;
    return c;
  }
  const ChainId c = choice.chain();
  if (!is_valid(order, c, p)) {
    throw Error(Errc::InvalidChain, "chain " + std::to_string(c) + " is not valid for point " +
                                        std::to_string(p));
  }
  auto& members = chains_[c];
  const auto at = std::partition_point(members.begin(), members.end(),
                                       [&](PointId q) { return order.less(q, p); });
  const auto index = static_cast<std::size_t>(at - members.begin());
  members.insert(at, p);
  for (std::size_t i = index; i < members.size(); ++i) position_[members[i]] = i;
  chain_of_[p] = c;
  return c;
}

}  // namespace chaingame
