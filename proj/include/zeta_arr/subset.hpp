#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zeta_arr {

// Subsets of the ground set {1..n} are bitmasks: element i (1-based) is bit
// i-1. Numeric order of the masks is colexicographic order of the subsets.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool subset_contains(Subset s, int index) {
  return ((s >> index) & 1U) != 0;
}

inline Subset full_set(int n) {
  return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1);
}

inline Subset singleton(int index) { return Subset{1} << index; }

// Builds a mask from 1-based element labels; throws PreconditionError on
// labels outside 1..n.
Subset subset_from_labels(std::span<const int> labels, int n);

// 1-based labels in increasing order.
std::vector<int> subset_labels(Subset s);

// "{1,2,3}"
std::string format_subset(Subset s);

// Calls fn(mask) for every k-subset of {0..n-1} in colex order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Subset{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    fn(static_cast<Subset>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace zeta_arr
