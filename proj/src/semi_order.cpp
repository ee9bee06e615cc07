#include "chaingame/semi_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace chaingame {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool IntervalRepresentation::represents(const SemiOrder& order) const {
  if (left.size() != order.size()) return false;
  for (PointId p = 0; p < order.size(); ++p) {
    for (PointId q = 0; q < order.size(); ++q) {
      if (p == q) continue;
      const Rational shifted = Rational::of(left[p].num + left[p].den, left[p].den);
      const bool entirely_left = shifted < left[q];
      if (entirely_left != order.less(p, q)) return false;
    }
  }
  return true;
}

namespace {

// Returns some f in `s` with another member of `s` below it, together with
// that lower member, if `s` contains a 2-chain.
std::optional<std::pair<PointId, PointId>> two_chain_in(const SemiOrder& order, const PointSet& s) {
  std::optional<std::pair<PointId, PointId>> found;
  s.for_each([&](PointId f) {
    if (found) return;
    const PointSet below = order.down(f) & s;
    if (auto e = below.first()) found = std::make_pair(*e, f);
  });
  return found;
}

}  // namespace

void SemiOrder::check_insertion(const PointSet& down, const PointSet& up) const {
  const std::size_t n = size();
  if (down.bound() > n || up.bound() > n) {
    throw Error(Errc::UnknownPoint, "declared relation references a point that does not exist");
  }
  if (down.intersects(up)) {
    throw Error(Errc::DownUpOverlap, "a point cannot be both below and above the new point",
                (down & up).ids());
  }

  // Closure of the declared sets.
  down.for_each([&](PointId q) {
    if (!down_[q].is_subset_of(down)) {
      const auto missing = (down_[q] - down).first();
      throw Error(Errc::NotDownwardClosed,
                  "down-set is not downward closed: " + std::to_string(*missing) + " < " +
                      std::to_string(q) + " is missing",
                  {*missing, q});
    }
  });
  up.for_each([&](PointId q) {
    if (!up_[q].is_subset_of(up)) {
      const auto missing = (up_[q] - up).first();
      throw Error(Errc::NotUpwardClosed,
                  "up-set is not upward closed: " + std::to_string(q) + " < " +
                      std::to_string(*missing) + " is missing",
                  {q, *missing});
    }
    if (!down.is_subset_of(down_[q])) {
      const auto missing = (down - down_[q]).first();
      throw Error(Errc::NotUpwardClosed,
                  "transitivity would require " + std::to_string(*missing) + " < " +
                      std::to_string(q),
                  {*missing, q});
    }
  });

  // Interval order: down-sets stay linearly ordered by inclusion.
  // Only the new point's down-set and the down-sets of `up` change.
  const PointId x = n;
  std::optional<PointId> smallest_up;
  up.for_each([&](PointId u) {
    if (!smallest_up || down_[u].count() < down_[*smallest_up].count()) smallest_up = u;
  });
  for (PointId v = 0; v < n; ++v) {
    if (up.contains(v)) continue;
    if (!down.is_subset_of(down_[v]) && !down_[v].is_subset_of(down)) {
      const PointId a = *(down - down_[v]).first();
      const PointId c = *(down_[v] - down).first();
      throw Error(Errc::TwoPlusTwo, "down-set of the new point is incomparable with that of " +
                                        std::to_string(v),
                  {a, x, c, v});
    }
    if (smallest_up && !down_[v].is_subset_of(down_[*smallest_up])) {
      const PointId u = *smallest_up;
      const PointId c = *(down_[v] - down_[u]).first();
      throw Error(Errc::TwoPlusTwo,
                  "point " + std::to_string(v) + " would have a down-set incomparable with that of " +
                      std::to_string(u),
                  {c, v, x, u});
    }
  }

  // (3+1): every new quadruple involves x in one of four roles.
  const PointSet incomparable = all() - down - up;
  auto comparable_to = [&](PointId h) { return down_[h] | up_[h]; };

  // x is the isolated point: a 3-chain among points incomparable to x.
  {
    std::optional<std::vector<PointId>> hit;
    incomparable.for_each([&](PointId f) {
      if (hit) return;
      const auto e = (down_[f] & incomparable).first();
      const auto g = (up_[f] & incomparable).first();
      if (e && g) hit = std::vector<PointId>{*e, f, *g, x};
    });
    if (hit) throw Error(Errc::ThreePlusOne, "new point is incomparable to a 3-chain", *hit);
  }

  incomparable.for_each([&](PointId h) {
    const PointSet free_down = down - comparable_to(h);
    const PointSet free_up = up - comparable_to(h);
    // x on top of a 3-chain.
    if (auto chain = two_chain_in(*this, free_down)) {
      throw Error(Errc::ThreePlusOne, "new point tops a 3-chain incomparable to " + std::to_string(h),
                  {chain->first, chain->second, x, h});
    }
    // x at the bottom.
    if (auto chain = two_chain_in(*this, free_up)) {
      throw Error(Errc::ThreePlusOne,
                  "new point is the bottom of a 3-chain incomparable to " + std::to_string(h),
                  {x, chain->first, chain->second, h});
    }
    // x in the middle.
    if (!free_down.empty() && !free_up.empty()) {
      throw Error(Errc::ThreePlusOne,
                  "new point is the middle of a 3-chain incomparable to " + std::to_string(h),
                  {*free_down.first(), x, *free_up.first(), h});
    }
  });
}

PointId SemiOrder::add_point(const PointSet& down, const PointSet& up) {
  check_insertion(down, up);
  const PointId x = size();
  down.for_each([&](PointId q) { up_[q].insert(x); });
  up.for_each([&](PointId q) { down_[q].insert(x); });
  down_.push_back(down);
  up_.push_back(up);
  return x;
}

PointSet SemiOrder::incomparables(PointId p) const {
  PointSet s = all() - down_.at(p) - up_.at(p);
  s.erase(p);
  return s;
}

PointSet SemiOrder::maximal_points() const {
  PointSet s;
  for (PointId p = 0; p < size(); ++p) {
    if (up_[p].empty()) s.insert(p);
  }
  return s;
}

std::size_t SemiOrder::width() const {
  // For the point m with the largest down-set of an antichain X, X lies in
  // {q : down(q) within down(m)} - down(m), which is itself an antichain.
  // Down-sets are nested, so inclusion reduces to comparing sizes.
  std::vector<std::size_t> sizes(size());
  for (PointId p = 0; p < size(); ++p) sizes[p] = down_[p].count();
  std::vector<std::size_t> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  std::size_t best = 0;
  for (PointId m = 0; m < size(); ++m) {
    const auto at_most = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), sizes[m]) - sorted.begin());
    best = std::max(best, at_most - sizes[m]);
  }
  return best;
}

IntervalRepresentation SemiOrder::interval_representation() const {
  const std::size_t n = size();
  IntervalRepresentation rep;
  if (n == 0) return rep;

  // Distances in units of eps = 1/(n+1): a unit length is n+1 units and a
  // strict gap is n+2 units.
  const auto unit = static_cast<std::int64_t>(n + 1);
  struct Edge {
    PointId from;
    PointId to;
    std::int64_t weight;
  };
  std::vector<Edge> edges;
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      if (p == q) continue;
      if (less(p, q)) {
        edges.push_back({q, p, -(unit + 1)});  // l(p) <= l(q) - (1 + eps)
      } else if (!less(q, p)) {
        edges.push_back({p, q, unit});  // l(q) <= l(p) + 1
      }
    }
  }

  // Source: the point with the largest down-set (every point is reachable
  // from it), ties to the smallest id.
  PointId source = 0;
  for (PointId p = 1; p < n; ++p) {
    if (down_[p].count() > down_[source].count()) source = p;
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(n, kInf);
  dist[source] = 0;
  bool relaxed = true;
  for (std::size_t round = 0; round <= n && relaxed; ++round) {
    relaxed = false;
    for (const Edge& e : edges) {
      if (dist[e.from] == kInf) continue;
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        relaxed = true;
      }
    }
  }
  if (relaxed || std::find(dist.begin(), dist.end(), kInf) != dist.end()) {
    throw Error(Errc::InternalInfeasible, "unit interval constraints are infeasible");
  }

  const std::int64_t lowest = *std::min_element(dist.begin(), dist.end());
  rep.left.reserve(n);
  for (PointId p = 0; p < n; ++p) rep.left.push_back(Rational::of(dist[p] - lowest, unit));
  return rep;
}

}  // namespace chaingame
