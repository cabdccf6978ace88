#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace chainpoly {

/// A finite set of positive integers below 64, stored as a bitmask
/// (bit i-1 holds position i). Used for descent sets, rank sets and the
/// index sets T, S of flag vectors.
class PositionSet {
 public:
  static constexpr int kMaxPosition = 63;

  constexpr PositionSet() = default;
  PositionSet(std::initializer_list<int> positions);
  static PositionSet from_mask(std::uint64_t mask) { return PositionSet(mask, 0); }
  /// {1, ..., n}
  static PositionSet interval(int n);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i <= kMaxPosition && ((mask_ >> (i - 1)) & 1U); }
  /// Largest element, 0 for the empty set.
  int max() const { return mask_ ? 64 - std::countl_zero(mask_) : 0; }
  std::vector<int> elements() const;

  void insert(int i);
  void erase(int i);

  bool is_subset_of(PositionSet other) const { return (mask_ & ~other.mask_) == 0; }
  PositionSet operator&(PositionSet o) const { return from_mask(mask_ & o.mask_); }
  PositionSet operator|(PositionSet o) const { return from_mask(mask_ | o.mask_); }
  /// Set difference.
  PositionSet operator-(PositionSet o) const { return from_mask(mask_ & ~o.mask_); }
  bool operator==(const PositionSet&) const = default;

  /// {a - k : a in this, a - k >= 1}
  PositionSet shifted_down(int k = 1) const;
  /// {m - a : a in this, 1 <= m - a <= 63}
  PositionSet reflected(int m) const;

  /// Comma-separated positions, "-" for the empty set.
  std::string to_string() const;
  static PositionSet parse(std::string_view text);

 private:
  constexpr PositionSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Calls f(S) for every subset S of `t`, in increasing mask order.
template <typename F>
void for_each_subset(PositionSet t, F&& f) {
  const std::uint64_t full = t.mask();
  std::uint64_t s = 0;
  while (true) {
    f(PositionSet::from_mask(s));
    if (s == full) break;
    s = (s - full) & full;
  }
}

}  // namespace chainpoly
