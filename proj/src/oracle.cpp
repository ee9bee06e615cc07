#include "chaingame/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "chaingame/arena.hpp"

namespace chaingame::oracle {

Relation Relation::from(const SemiOrder& order) {
  Relation r(order.size());
  for (PointId q = 0; q < order.size(); ++q) {
    order.down(q).for_each([&](PointId p) { r.less[p][q] = true; });
  }
  return r;
}

std::string_view pattern_name(PatternKind kind) {
  return kind == PatternKind::TwoPlusTwo ? "two_plus_two" : "three_plus_one";
}

namespace {

bool is_two_plus_two(const Relation& r, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return r.lt(a, b) && r.lt(c, d) && r.incomparable(a, c) && r.incomparable(a, d) &&
         r.incomparable(b, c) && r.incomparable(b, d);
}

bool is_three_plus_one(const Relation& r, std::size_t e, std::size_t f, std::size_t g, std::size_t h) {
  return r.lt(e, f) && r.lt(f, g) && r.lt(e, g) && r.incomparable(e, h) && r.incomparable(f, h) &&
         r.incomparable(g, h);
}

}  // namespace

std::optional<PatternWitness> brute_forbidden(const Relation& r) {
  const std::size_t n = r.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Both patterns need the first two roles related.
      if (j == i || !r.lt(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (!r.lt(j, k) && !r.incomparable(i, k)) continue;  // neither pattern can start here
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          if (is_two_plus_two(r, i, j, k, l)) return PatternWitness{PatternKind::TwoPlusTwo, {i, j, k, l}};
          if (is_three_plus_one(r, i, j, k, l)) {
            return PatternWitness{PatternKind::ThreePlusOne, {i, j, k, l}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> brute_forbidden(const SemiOrder& order) {
  return brute_forbidden(Relation::from(order));
}

bool brute_is_order(const Relation& r) {
  for (std::size_t a = 0; a < r.n; ++a) {
    if (r.lt(a, a)) return false;
    for (std::size_t b = 0; b < r.n; ++b) {
      if (!r.lt(a, b)) continue;
      if (r.lt(b, a)) return false;
      for (std::size_t c = 0; c < r.n; ++c) {
        if (r.lt(b, c) && !r.lt(a, c)) return false;
      }
    }
  }
  return true;
}

std::size_t brute_width(const Relation& r) {
  if (r.n > 20) throw Error(Errc::InvalidArgument, "brute_width enumerates subsets; n must be at most 20");
  if (r.n == 0) return 0;
  std::vector<std::uint32_t> comparable(r.n, 0);
  for (std::size_t p = 0; p < r.n; ++p) {
    for (std::size_t q = 0; q < r.n; ++q) {
      if (p != q && !r.incomparable(p, q)) comparable[p] |= std::uint32_t{1} << q;
    }
  }
  const std::uint32_t full = std::uint32_t{1} << r.n;
  std::vector<bool> antichain(full, false);
  antichain[0] = true;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    antichain[mask] = antichain[rest] && (comparable[low] & rest) == 0;
    if (antichain[mask]) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

std::size_t brute_width(const SemiOrder& order) { return brute_width(Relation::from(order)); }

ChainPartition min_chain_partition(const SemiOrder& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<PointId>> above(n);
  for (PointId q = 0; q < n; ++q) {
    order.down(q).for_each([&](PointId p) { above[p].push_back(q); });
  }
  // match_right[q] = p means q follows p in its chain.
  std::vector<std::optional<PointId>> match_right(n);
  std::vector<char> seen;
  std::function<bool(PointId)> augment = [&](PointId p) {
    for (PointId q : above[p]) {
      if (seen[q]) continue;
      seen[q] = 1;
      if (!match_right[q] || augment(*match_right[q])) {
        match_right[q] = p;
        return true;
      }
    }
    return false;
  };
  for (PointId p = 0; p < n; ++p) {
    seen.assign(n, 0);
    augment(p);
  }
  std::vector<std::optional<PointId>> next(n);
  for (PointId q = 0; q < n; ++q) {
    if (match_right[q]) next[*match_right[q]] = q;
  }
  std::vector<std::vector<PointId>> chains;
  for (PointId p = 0; p < n; ++p) {
    if (match_right[p]) continue;  // not a chain bottom
    std::vector<PointId> chain{p};
    while (next[chain.back()]) chain.push_back(*next[chain.back()]);
    chains.push_back(std::move(chain));
  }
  return ChainPartition::from_chains(order, std::move(chains));
}

MaxX0 max_x0(std::uint64_t w) {
  // reach[s][x]: with prefix sum s and current entry x, some continuation
  // reaches 0. Every step has s + x <= w, so the table is (w+1)^2.
  const std::size_t size = static_cast<std::size_t>(w) + 1;
  std::vector<std::vector<signed char>> reach(size, std::vector<signed char>(size, -1));
  std::vector<std::vector<std::uint64_t>> choice(size, std::vector<std::uint64_t>(size, 0));

  std::function<bool(std::uint64_t, std::uint64_t)> feasible = [&](std::uint64_t s, std::uint64_t x) -> bool {
    if (x == 0) return true;
    if (s + x > w) return false;
    auto& cell = reach[s][x];
    if (cell >= 0) return cell == 1;
    cell = 0;
    const std::uint64_t lo = s + 2 * x > w ? s + 2 * x - w : 0;
    for (std::uint64_t next = lo; next <= x; ++next) {
      if (feasible(s + x, next)) {
        cell = 1;
        choice[s][x] = next;
        break;
      }
    }
    return cell == 1;
  };

  for (std::uint64_t x0 = w; ; --x0) {
    if (feasible(0, x0)) {
      MaxX0 out{x0, {x0}};
      std::uint64_t s = 0;
      std::uint64_t x = x0;
      while (x != 0) {
        const std::uint64_t next = choice[s][x];
        s += x;
        x = next;
        out.certificate.push_back(x);
      }
      return out;
    }
    if (x0 == 0) break;
  }
  return {0, {0}};
}

namespace {

class AdversarySearch {
 public:
  AdversarySearch(std::uint64_t w, Mode mode, std::uint64_t cap) : w_(w), mode_(mode), cap_(cap) {}

  std::size_t solve(std::unique_ptr<Spoiler> spoiler, SemiOrder order, ChainPartition partition,
                    std::optional<Assignment> last) {
    const SpoilerMove move = spoiler->next(last);
    if (move.done) return partition.chain_count();
    try {
      referee_present(order, mode_, w_, move.down, move.up);
    } catch (const Error& e) {
      throw Error(Errc::InternalStrategy, std::string("spoiler made an illegal move: ") + e.what(), e.witness());
    }
    const PointId p = order.size() - 1;

    const std::string key = state_key(*spoiler, order, partition);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<ChainChoice> options;
    for (ChainId c : partition.valid_chains(order, p)) options.push_back(ChainChoice::existing(c));
    options.push_back(ChainChoice::fresh());

    std::size_t best = SIZE_MAX;
    for (const ChainChoice& option : options) {
      if (++nodes_ > cap_) {
        throw Error(Errc::BudgetExceeded, "exhaustive search exceeded " + std::to_string(cap_) + " nodes");
      }
      ChainPartition child = partition;
      const ChainId c = child.assign(order, p, option);
      best = std::min(best, solve(spoiler->clone(), order, std::move(child), Assignment{p, c}));
    }
    memo_.emplace(key, best);
    return best;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::string state_key(const Spoiler& spoiler, const SemiOrder& order, const ChainPartition& partition) const {
    std::ostringstream out;
    out << spoiler.state_key() << '#';
    for (PointId q = 0; q < order.size(); ++q) {
      order.down(q).for_each([&](PointId d) { out << d << ','; });
      out << ';';
    }
    out << '#' << partition.chain_count() << ':';
    if (spoiler.uses_chain_identity()) {
      for (const auto& chain : partition.chains()) {
        for (PointId q : chain) out << q << ',';
        out << ';';
      }
    } else if (mode_ == Mode::UpGrowing) {
      // New points are maximal, so a chain's top decides its validity.
      auto tops = partition.tops();
      std::sort(tops.begin(), tops.end());
      for (PointId t : tops) out << t << ',';
    } else {
      auto chains = partition.chains();
      std::sort(chains.begin(), chains.end());
      for (const auto& chain : chains) {
        for (PointId q : chain) out << q << ',';
        out << ';';
      }
    }
    return out.str();
  }

  std::uint64_t w_;
  Mode mode_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, std::size_t> memo_;
};

}  // namespace

AdversaryResult exhaustive_adversary(std::string_view spoiler, std::uint64_t w, Mode mode,
                                     std::uint64_t node_cap) {
  if (spoiler == "random") {
    throw Error(Errc::InvalidArgument, "exhaustive search needs an adaptive spoiler (golden or doubler)");
  }
  auto root = make_spoiler(spoiler, mode, w, 0, 0);
  if (spoiler == "doubler" && mode == Mode::UpGrowing) {
    throw Error(Errc::ModeMismatch, "the doubler spoiler needs general mode");
  }
  AdversarySearch search(w, mode, node_cap);
  AdversaryResult result;
  result.min_chains = search.solve(std::move(root), SemiOrder{}, ChainPartition{}, std::nullopt);
  result.nodes = search.nodes();
  result.memo_entries = search.memo_size();
  return result;
}

CoverCheck brute_optimal_online_check(const Transcript& transcript) {
  const ReplayedGame game = rebuild(transcript);
  CoverCheck check;
  check.chains_used = transcript.chains_used;
  check.width = min_chain_partition(game.order).chain_count();
  check.ok = check.chains_used >= check.width;
  return check;
}

}  // namespace chaingame::oracle
