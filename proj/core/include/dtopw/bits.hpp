#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dtopw {

/// Subset of a carrier of at most 64 points, bit i standing for point i.
using Mask = std::uint64_t;

inline constexpr int kMaxMaskPoints = 64;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }
constexpr bool has(Mask m, int i) noexcept { return ((m >> i) & 1U) != 0; }
constexpr bool subset_of(Mask a, Mask b) noexcept { return (a & ~b) == 0; }
constexpr Mask full_mask(int n) noexcept {
  return n >= kMaxMaskPoints ? ~Mask{0} : bit(n) - 1;
}
inline int cardinality(Mask m) noexcept { return std::popcount(m); }
inline int lowest(Mask m) noexcept { return std::countr_zero(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(m)));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace dtopw
