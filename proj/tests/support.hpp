#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "chaingame/oracle.hpp"
#include "chaingame/semi_order.hpp"

namespace testsupport {

using chaingame::PointId;
using chaingame::PointSet;
using chaingame::SemiOrder;

/// Unit intervals on a grid of `grid` steps per unit; p < q iff the left
/// endpoints differ by more than one unit.
struct IntervalSample {
  std::vector<std::int64_t> left;  // in presentation order
  std::int64_t grid = 4;

  bool less(std::size_t p, std::size_t q) const { return left[q] - left[p] > grid; }
};

inline IntervalSample random_intervals(std::mt19937_64& rng, std::size_t n, std::int64_t span, bool sorted) {
  IntervalSample s;
  std::uniform_int_distribution<std::int64_t> pick(0, span);
  for (std::size_t i = 0; i < n; ++i) s.left.push_back(pick(rng));
  if (sorted) std::sort(s.left.begin(), s.left.end());
  return s;
}

/// Down- and up-set of point i against points 0..i-1 of the sample.
inline std::pair<PointSet, PointSet> relations_of(const IntervalSample& s, std::size_t i) {
  PointSet down;
  PointSet up;
  for (std::size_t j = 0; j < i; ++j) {
    if (s.less(j, i)) down.insert(j);
    if (s.less(i, j)) up.insert(j);
  }
  return {down, up};
}

inline SemiOrder build(const IntervalSample& s) {
  SemiOrder order;
  for (std::size_t i = 0; i < s.left.size(); ++i) {
    auto [down, up] = relations_of(s, i);
    order.add_point(down, up);
  }
  return order;
}

inline SemiOrder random_semi_order(std::mt19937_64& rng, std::size_t n, bool up_growing = false) {
  const auto span = static_cast<std::int64_t>(std::max<std::size_t>(n, 4));
  return build(random_intervals(rng, n, span, up_growing));
}

/// Relation of `order` extended by one point with the declared sets.
inline chaingame::oracle::Relation extended(const SemiOrder& order, const PointSet& down, const PointSet& up) {
  chaingame::oracle::Relation r(order.size() + 1);
  for (PointId q = 0; q < order.size(); ++q) {
    order.down(q).for_each([&](PointId p) { r.less[p][q] = true; });
  }
  const PointId x = order.size();
  down.for_each([&](PointId p) { r.less[p][x] = true; });
  up.for_each([&](PointId p) { r.less[x][p] = true; });
  return r;
}

/// A candidate insertion: often legal, often slightly off.
inline std::pair<PointSet, PointSet> random_candidate(std::mt19937_64& rng, const SemiOrder& order) {
  const std::size_t n = order.size();
  std::uniform_int_distribution<int> kind(0, 3);
  PointSet down;
  PointSet up;
  if (n == 0) return {down, up};
  std::uniform_int_distribution<std::size_t> point(0, n - 1);
  switch (kind(rng)) {
    case 0: {  // copy an existing point's relations
      const PointId p = point(rng);
      down = order.down(p);
      up = order.up(p);
      break;
    }
    case 1: {  // strictly above an existing down-set
      const PointId p = point(rng);
      down = order.down(p);
      down.insert(p);
      break;
    }
    case 2: {  // random subsets
      std::bernoulli_distribution coin(0.2);
      for (PointId p = 0; p < n; ++p) {
        if (coin(rng)) down.insert(p);
      }
      break;
    }
    default: {  // an existing point's relations with one flip
      const PointId p = point(rng);
      down = order.down(p);
      up = order.up(p);
      const PointId q = point(rng);
      if (down.contains(q)) {
        down.erase(q);
      } else if (up.contains(q)) {
        up.erase(q);
      } else {
        down.insert(q);
      }
      break;
    }
  }
  return {down, up};
}

}  // namespace testsupport
