#pragma once

#include <cstdint>
#include <vector>

#include "zeta_arr/laurent.hpp"
#include "zeta_arr/subset.hpp"

namespace zeta_arr {

// Integer weight on the ground set; entry i belongs to element i+1.
using WeightVector = std::vector<std::int64_t>;

struct Flat {
  Subset elements = 0;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// A matroid stored as its explicit basis family, kept sorted in colex order.
// The rank of every subset is tabulated at construction, so ground sets are
// limited to kMaxGroundSet elements. Instances are immutable.
class Matroid {
 public:
  // Validates the basis family: nonempty, every basis has d elements inside
  // {1..n}, basis exchange holds. Loops are allowed here.
  static Matroid from_bases(int n, int d, std::vector<Subset> bases);
  static Matroid uniform(int d, int n);
  static Matroid boolean(int n);

  int size() const { return n_; }
  int rank() const { return d_; }
  const std::vector<Subset>& bases() const { return bases_; }

  // max over bases B of |B ∩ s|; s must lie inside the ground set.
  int rank(Subset s) const;

  bool is_basis(Subset s) const;
  bool is_independent(Subset s) const { return rank(s) == subset_size(s); }
  bool is_flat(Subset s) const;
  Subset closure(Subset s) const;

  Subset loops() const;
  bool is_loop_free() const { return loops() == 0; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.bases_ == b.bases_;
  }

 private:
  friend Matroid initial_matroid(const Matroid& m, const WeightVector& w);

  // No validation beyond sorting; callers guarantee the basis axioms.
  Matroid(int n, int d, std::vector<Subset> bases);

  int n_ = 0;
  int d_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_table_;
};

// Exhaustive check of the basis-exchange axiom.
bool satisfies_basis_exchange(int n, const std::vector<Subset>& bases);

// rank(M, S) with an explicit range check on S.
int rank_of(const Matroid& m, Subset s);

// Σ_{I ⊆ E} (-1)^{|I|} L^{d - rk I}
LaurentPoly characteristic_polynomial(const Matroid& m);

// max_B Σ_{i∈B} w_i over the basis list.
std::int64_t weight(const Matroid& m, const WeightVector& w);

// Same value via the matroid greedy algorithm.
std::int64_t weight_greedy(const Matroid& m, const WeightVector& w);

// Matroid whose bases are the w-maximal bases of m. May contain loops.
Matroid initial_matroid(const Matroid& m, const WeightVector& w);

// True iff the initial matroid at w is loop-free.
bool in_bergman_fan(const Matroid& m, const WeightVector& w);

// Fan membership for nonnegative w through level sets: every
// {i : w_i >= t}, 1 <= t <= max(w), must be a flat.
bool in_bergman_fan_level_sets(const Matroid& m, const WeightVector& w);

// Unique circuit inside B ∪ {i}. `element` is 0-based. Throws when B is not
// a basis or already contains the element.
Subset fundamental_circuit(const Matroid& m, int element, Subset basis);

// Minimal dependent sets, colex order.
std::vector<Subset> circuits(const Matroid& m);

// All flats in colex order of their element sets.
std::vector<Flat> flats(const Matroid& m);

void check_weight_length(const Matroid& m, const WeightVector& w);

}  // namespace zeta_arr
