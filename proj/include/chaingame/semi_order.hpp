#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chaingame/error.hpp"
#include "chaingame/point_set.hpp"

namespace chaingame {

/// Exact rational number, always stored in lowest terms with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  std::string str() const;
};

/// Unit interval [l, l + 1] per point.
struct IntervalRepresentation {
  std::vector<Rational> left;

  /// True iff p < q in `order` exactly when l(p) + 1 < l(q), for all pairs.
  bool represents(const class SemiOrder& order) const;
};

/// On-line semi-order. Points arrive one at a time with declared strict
/// down- and up-sets; every insertion is checked against the semi-order
/// axioms and the order is left untouched when the check fails.
class SemiOrder {
 public:
  std::size_t size() const { return down_.size(); }

  /// Appends a point whose strict relations are exactly `down` and `up`.
  /// The declared sets must already be transitively closed.
  /// Throws Error with UnknownPoint, DownUpOverlap, NotDownwardClosed,
  /// NotUpwardClosed, TwoPlusTwo or ThreePlusOne.
  PointId add_point(const PointSet& down, const PointSet& up = {});

  const PointSet& down(PointId p) const { return down_.at(p); }
  const PointSet& up(PointId p) const { return up_.at(p); }

  bool less(PointId p, PointId q) const { return down_[q].contains(p); }
  bool comparable(PointId p, PointId q) const { return less(p, q) || less(q, p); }

  PointSet all() const { return PointSet::prefix(size()); }
  PointSet incomparables(PointId p) const;
  PointSet maximal_points() const;

  /// Size of a maximum antichain.
  std::size_t width() const;

  IntervalRepresentation interval_representation() const;

 private:
  // Throws on the first violated axiom; pure.
  void check_insertion(const PointSet& down, const PointSet& up) const;

  std::vector<PointSet> down_;
  std::vector<PointSet> up_;
};

}  // namespace chaingame
