#pragma once

#include <cstdint>
#include <vector>

#include "zeta_arr/matroid.hpp"

namespace zeta_arr {

// Strictly increasing chain G_1 ⊊ ... ⊊ G_k of proper nonempty flats.
struct FlagChain {
  std::vector<Subset> flats;
  std::vector<int> ranks;

  std::size_t length() const { return flats.size(); }
  friend bool operator==(const FlagChain&, const FlagChain&) = default;
};

// w = c0 * (1,...,1) + Σ_j c_j * 1_{G_j}, with c0 >= 0 and c_j >= 1.
struct ChainPoint {
  FlagChain chain;
  std::int64_t c0 = 0;
  std::vector<std::int64_t> c;

  friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
};

// Nonnegative (strict: positive) fan points with Σ u_i w_i = degree, in
// lexicographic order. The first overload uses u = (1,...,1).
std::vector<WeightVector> lattice_points(const Matroid& m, std::int64_t degree, bool strict);
std::vector<WeightVector> lattice_points(const Matroid& m, const WeightVector& u,
                                         std::int64_t degree, bool strict);

// All chains of proper nonempty flats, the empty chain first; ordered by
// length, then lexicographically on the flat masks.
std::vector<FlagChain> chains(const Matroid& m);

// Initial matroid at the indicator sum of the chain; must be loop-free.
Matroid chain_matroid(const Matroid& m, const FlagChain& chain);

ChainPoint decode(const Matroid& m, const WeightVector& w);
WeightVector encode(int n, const ChainPoint& point);

// Σ_i u_i for i in s.
std::int64_t subset_weight(const WeightVector& u, Subset s);

// Compares lattice_points against the encodings of all chain points for every
// degree up to max_degree, in both positivity modes. True when they coincide
// without duplicates.
bool chain_bijection_holds(const Matroid& m, const WeightVector& u, std::int64_t max_degree);

}  // namespace zeta_arr
