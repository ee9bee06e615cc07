#pragma once

#include <cstdint>
#include <vector>

namespace chaingame {

/// floor(sqrt(n)), exact.
std::uint64_t isqrt(std::uint64_t n);

/// floor(phi * w) with phi the golden ratio, computed as (w + isqrt(5 w^2)) / 2.
std::uint64_t game_value(std::uint64_t w);

/// floor((phi - 1) * z) = (isqrt(5 z^2) - z) / 2.
std::uint64_t floor_golden_fraction(std::uint64_t z);

/// Integer solution (x_0, ..., x_k, x_{k+1} = 0) of the inequality system
///   x_0 + ... + x_{j-1} + 2 x_j - x_{j+1} <= w,   j = 0..k,
/// with x_0 = floor((phi - 1) w), non-increasing and x_k > 0. When
/// x_0 = 0 the solution degenerates to the single entry (0).
struct IkSolution {
  std::uint64_t w = 0;
  std::vector<std::uint64_t> xs;

  /// Index of the last positive entry; -1 for the degenerate solution.
  int k() const { return static_cast<int>(xs.size()) - 2; }
  /// True iff every inequality of the system holds and the sequence is
  /// non-increasing with a single trailing zero.
  bool satisfies_system() const;
};

IkSolution solve_ik(std::uint64_t w);

}  // namespace chaingame
