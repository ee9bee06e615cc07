#include "chaingame/game_value.hpp"

#include "chaingame/error.hpp"

namespace chaingame {

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton iteration from an over-estimate converges monotonically down.
  std::uint64_t x = n;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::uint64_t game_value(std::uint64_t w) {
  if (w > 1'000'000'000ULL) throw Error(Errc::InvalidArgument, "width too large for exact evaluation");
  return (w + isqrt(5 * w * w)) / 2;
}

std::uint64_t floor_golden_fraction(std::uint64_t z) {
  if (z > 1'000'000'000ULL) throw Error(Errc::InvalidArgument, "argument too large for exact evaluation");
  return (isqrt(5 * z * z) - z) / 2;
}

bool IkSolution::satisfies_system() const {
  if (xs.empty() || xs.back() != 0) return false;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    if (xs[j] < xs[j + 1]) return false;
  }
  if (xs.size() >= 2 && xs[xs.size() - 2] == 0) return false;
  std::uint64_t prefix = 0;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    // prefix + 2 x_j - x_{j+1} <= w, kept in unsigned arithmetic.
    if (prefix + 2 * xs[j] > w + xs[j + 1]) return false;
    prefix += xs[j];
  }
  return true;
}

IkSolution solve_ik(std::uint64_t w) {
  if (w == 0) throw Error(Errc::InvalidArgument, "width must be at least 1");
  IkSolution sol{w, {}};
  std::uint64_t used = 0;
  while (true) {
    const std::uint64_t next = floor_golden_fraction(w - used);
    sol.xs.push_back(next);
    if (next == 0) break;
    used += next;
  }
  return sol;
}

}  // namespace chaingame
