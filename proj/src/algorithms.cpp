#include "chaingame/algorithms.hpp"

#include <random>

namespace chaingame {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 generator_for(PointId p, std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(p)));
}

}  // namespace

ChainChoice alg_choose(const SemiOrder& order, const ChainPartition& partition, PointId p) {
  if (!order.up(p).empty()) {
    throw Error(Errc::NotMaximal, "ALG is only defined for maximal points; point " + std::to_string(p) +
                                      " has successors");
  }
  std::optional<ChainId> best;
  std::size_t best_up = 0;
  for (ChainId c : partition.valid_chains(order, p)) {
    // Up-sets are measured in the prefix before p, so p itself is excluded.
    const PointSet& up = order.up(partition.top(c));
    const std::size_t size = up.count() - (up.contains(p) ? 1 : 0);
    if (!best || size < best_up) {
      best = c;
      best_up = size;
    }
  }
  return best ? ChainChoice::existing(*best) : ChainChoice::fresh();
}

ChainChoice first_fit_choose(const SemiOrder& order, const ChainPartition& partition, PointId p) {
  for (ChainId c = 0; c < partition.chain_count(); ++c) {
    if (partition.is_valid(order, c, p)) return ChainChoice::existing(c);
  }
  return ChainChoice::fresh();
}

ChainChoice random_valid_choose(const SemiOrder& order, const ChainPartition& partition, PointId p,
                                std::uint64_t seed) {
  const auto valid = partition.valid_chains(order, p);
  auto gen = generator_for(p, seed);
  std::uniform_int_distribution<std::size_t> pick(0, valid.size());
  const std::size_t i = pick(gen);
  return i == valid.size() ? ChainChoice::fresh() : ChainChoice::existing(valid[i]);
}

ChainChoice random_greedy_choose(const SemiOrder& order, const ChainPartition& partition, PointId p,
                                 std::uint64_t seed) {
  const auto valid = partition.valid_chains(order, p);
  if (valid.empty()) return ChainChoice::fresh();
  auto gen = generator_for(p, seed);
  std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
  return ChainChoice::existing(valid[pick(gen)]);
}

namespace {

class Alg final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "alg"; }
  bool requires_up_growing() const override { return true; }
  ChainChoice choose(const SemiOrder& o, const ChainPartition& part, PointId p) const override {
    return alg_choose(o, part, p);
  }
};

class FirstFit final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "first-fit"; }
  ChainChoice choose(const SemiOrder& o, const ChainPartition& part, PointId p) const override {
    return first_fit_choose(o, part, p);
  }
};

class RandomValid final : public OnlineAlgorithm {
 public:
  explicit RandomValid(std::uint64_t seed) : seed_(seed) {}
  std::string_view name() const override { return "random"; }
  ChainChoice choose(const SemiOrder& o, const ChainPartition& part, PointId p) const override {
    return random_valid_choose(o, part, p, seed_);
  }

 private:
  std::uint64_t seed_;
};

class RandomGreedy final : public OnlineAlgorithm {
 public:
  explicit RandomGreedy(std::uint64_t seed) : seed_(seed) {}
  std::string_view name() const override { return "random-greedy"; }
  ChainChoice choose(const SemiOrder& o, const ChainPartition& part, PointId p) const override {
    return random_greedy_choose(o, part, p, seed_);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace

std::string canonical_algorithm_name(std::string_view name) {
  if (name == "alg") return "alg";
  if (name == "first-fit" || name == "first_fit") return "first-fit";
  if (name == "random") return "random";
  if (name == "random-greedy" || name == "random_greedy") return "random-greedy";
  throw Error(Errc::UnknownStrategy, "unknown algorithm '" + std::string(name) + "'");
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name, std::uint64_t seed) {
  const std::string canonical = canonical_algorithm_name(name);
  if (canonical == "alg") return std::make_unique<Alg>();
  if (canonical == "first-fit") return std::make_unique<FirstFit>();
  if (canonical == "random") return std::make_unique<RandomValid>(seed);
  return std::make_unique<RandomGreedy>(seed);
}

std::vector<std::string> algorithm_names() { return {"alg", "first-fit", "random", "random-greedy"}; }

}  // namespace chaingame
