#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "chaingame/error.hpp"

namespace chaingame {

/// Set of point ids stored as a growable bitset. Words past the end are
/// implicitly zero, so sets of different lengths compose freely.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<PointId> ids) {
    for (PointId id : ids) insert(id);
  }

  template <typename Range>
  static PointSet of(const Range& ids) {
    PointSet s;
    for (auto id : ids) s.insert(static_cast<PointId>(id));
    return s;
  }

  /// The set {0, ..., n-1}.
  static PointSet prefix(std::size_t n) {
    PointSet s;
    s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
  }

  void insert(PointId id) {
    const std::size_t w = id / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (id % 64);
  }

  void erase(PointId id) {
    const std::size_t w = id / 64;
    if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (id % 64));
  }

  bool contains(PointId id) const {
    const std::size_t w = id / 64;
    return w < words_.size() && ((words_[w] >> (id % 64)) & 1U) != 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto word : words_) c += static_cast<std::size_t>(std::popcount(word));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto word) { return word == 0; });
  }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.word(i)) != 0) return false;
    }
    return true;
  }

  bool intersects(const PointSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  PointSet& operator|=(const PointSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  PointSet& operator&=(const PointSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.word(i);
    return *this;
  }

  /// Set difference.
  PointSet& operator-=(const PointSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.word(i) != b.word(i)) return false;
    }
    return true;
  }

  std::optional<PointId> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return std::nullopt;
  }

  /// Calls f(id) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t word = words_[i];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(i * 64 + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<PointId> ids() const {
    std::vector<PointId> out;
    for_each([&](PointId id) { out.push_back(id); });
    return out;
  }

  /// Largest member plus one, or 0 for the empty set.
  std::size_t bound() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) return i * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    }
    return 0;
  }

 private:
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

  std::vector<std::uint64_t> words_;
};

}  // namespace chaingame
