#include "zeta_arr/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

namespace {

bool contains_basis(const std::vector<Subset>& sorted_bases, Subset s) {
  return std::binary_search(sorted_bases.begin(), sorted_bases.end(), s);
}

std::int64_t subset_sum(const WeightVector& w, Subset s) {
  std::int64_t total = 0;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1U) total += w[static_cast<std::size_t>(i)];
  }
  return total;
}

}  // namespace

Matroid::Matroid(int n, int d, std::vector<Subset> bases)
    : n_(n), d_(d), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());

  // Independent sets are the subsets of bases; supersets have larger masks,
  // so a descending sweep sees them first.
  const std::size_t count = std::size_t{1} << n_;
  std::vector<bool> independent(count, false);
  for (Subset b : bases_) independent[b] = true;
  for (std::size_t s = count; s-- > 0;) {
    if (independent[s] || subset_size(static_cast<Subset>(s)) >= d_) continue;
    for (int e = 0; e < n_; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((s & bit) == 0 && independent[s | bit]) {
        independent[s] = true;
        break;
      }
    }
  }
  rank_table_.assign(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    if (independent[s]) {
      rank_table_[s] = static_cast<std::uint8_t>(subset_size(static_cast<Subset>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (int e = 0; e < n_; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if (s & bit) best = std::max(best, rank_table_[s & ~bit]);
    }
    rank_table_[s] = best;
  }
}

Matroid Matroid::from_bases(int n, int d, std::vector<Subset> bases) {
  if (n < 1 || n > kMaxGroundSet) {
    throw PreconditionError("ground set size must lie in 1.." + std::to_string(kMaxGroundSet));
  }
  if (d < 1 || d > n) throw PreconditionError("rank must lie in 1..n");
  if (bases.empty()) throw PreconditionError("basis family is empty");
  for (Subset b : bases) {
    if ((b & ~full_set(n)) != 0) throw PreconditionError("basis element outside ground set");
    if (subset_size(b) != d) {
      throw PreconditionError("basis " + format_subset(b) + " does not have " +
                              std::to_string(d) + " elements");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (!satisfies_basis_exchange(n, bases)) {
    throw PreconditionError("basis family violates the exchange axiom");
  }
  return Matroid(n, d, std::move(bases));
}

Matroid Matroid::uniform(int d, int n) {
  if (n < 1 || n > kMaxGroundSet || d < 1 || d > n) {
    throw PreconditionError("uniform matroid needs 1 <= d <= n <= " +
                            std::to_string(kMaxGroundSet));
  }
  std::vector<Subset> bases;
  for_each_k_subset(n, d, [&](Subset s) { bases.push_back(s); });
  return Matroid(n, d, std::move(bases));
}

Matroid Matroid::boolean(int n) { return uniform(n, n); }

int Matroid::rank(Subset s) const { return rank_table_[s & full_set(n_)]; }

bool Matroid::is_basis(Subset s) const { return contains_basis(bases_, s); }

bool Matroid::is_flat(Subset s) const {
  const int r = rank(s);
  for (int e = 0; e < n_; ++e) {
    if (!subset_contains(s, e) && rank(s | singleton(e)) == r) return false;
  }
  return true;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank(s);
  Subset c = s;
  for (int e = 0; e < n_; ++e) {
    if (!subset_contains(s, e) && rank(s | singleton(e)) == r) c |= singleton(e);
  }
  return c;
}

Subset Matroid::loops() const {
  Subset covered = 0;
  for (Subset b : bases_) covered |= b;
  return full_set(n_) & ~covered;
}

bool satisfies_basis_exchange(int n, const std::vector<Subset>& bases) {
  std::vector<Subset> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  for (Subset b1 : sorted) {
    for (Subset b2 : sorted) {
      const Subset only1 = b1 & ~b2;
      const Subset only2 = b2 & ~b1;
      for (int e = 0; e < n; ++e) {
        if (!subset_contains(only1, e)) continue;
        bool found = false;
        for (int f = 0; f < n && !found; ++f) {
          if (subset_contains(only2, f)) {
            found = contains_basis(sorted, (b1 & ~singleton(e)) | singleton(f));
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

int rank_of(const Matroid& m, Subset s) {
  if ((s & ~full_set(m.size())) != 0) {
    throw PreconditionError("subset " + format_subset(s) + " leaves the ground set");
  }
  return m.rank(s);
}

LaurentPoly characteristic_polynomial(const Matroid& m) {
  const int d = m.rank();
  std::vector<long long> by_corank(static_cast<std::size_t>(d) + 1, 0);
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < count; ++s) {
    const auto mask = static_cast<Subset>(s);
    const int sign = subset_size(mask) % 2 == 0 ? 1 : -1;
    by_corank[static_cast<std::size_t>(d - m.rank(mask))] += sign;
  }
  LaurentPoly chi;
  for (int k = 0; k <= d; ++k) {
    chi.add_term(mpz_class(static_cast<long>(by_corank[static_cast<std::size_t>(k)])), k);
  }
  return chi;
}

void check_weight_length(const Matroid& m, const WeightVector& w) {
  if (static_cast<int>(w.size()) != m.size()) {
    throw PreconditionError("weight vector has length " + std::to_string(w.size()) +
                            ", expected " + std::to_string(m.size()));
  }
}

std::int64_t weight(const Matroid& m, const WeightVector& w) {
  check_weight_length(m, w);
  std::int64_t best = 0;
  bool first = true;
  for (Subset b : m.bases()) {
    const std::int64_t s = subset_sum(w, b);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

std::int64_t weight_greedy(const Matroid& m, const WeightVector& w) {
  check_weight_length(m, w);
  std::vector<int> order(static_cast<std::size_t>(m.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)];
  });
  Subset chosen = 0;
  std::int64_t total = 0;
  for (int e : order) {
    const Subset next = chosen | singleton(e);
    if (m.is_independent(next)) {
      chosen = next;
      total += w[static_cast<std::size_t>(e)];
    }
  }
  return total;
}

Matroid initial_matroid(const Matroid& m, const WeightVector& w) {
  const std::int64_t best = weight(m, w);
  std::vector<Subset> maximal;
  for (Subset b : m.bases()) {
    if (subset_sum(w, b) == best) maximal.push_back(b);
  }
  return Matroid(m.size(), m.rank(), std::move(maximal));
}

bool in_bergman_fan(const Matroid& m, const WeightVector& w) {
  return initial_matroid(m, w).is_loop_free();
}

bool in_bergman_fan_level_sets(const Matroid& m, const WeightVector& w) {
  check_weight_length(m, w);
  if (!m.is_loop_free()) return false;
  const std::int64_t low = *std::min_element(w.begin(), w.end());
  std::vector<std::int64_t> values(w.begin(), w.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::int64_t v : values) {
    if (v == low) continue;
    Subset level = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (w[static_cast<std::size_t>(i)] >= v) level |= singleton(i);
    }
    if (!m.is_flat(level)) return false;
  }
  return true;
}

Subset fundamental_circuit(const Matroid& m, int element, Subset basis) {
  if (element < 0 || element >= m.size()) throw PreconditionError("element out of range");
  if (!m.is_basis(basis)) {
    throw PreconditionError(format_subset(basis) + " is not a basis");
  }
  if (subset_contains(basis, element)) {
    throw PreconditionError("element " + std::to_string(element + 1) + " lies in the basis");
  }
  Subset circuit = singleton(element);
  for (int b = 0; b < m.size(); ++b) {
    if (subset_contains(basis, b) &&
        m.is_basis((basis & ~singleton(b)) | singleton(element))) {
      circuit |= singleton(b);
    }
  }
  return circuit;
}

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> result;
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 1; s < count; ++s) {
    const auto mask = static_cast<Subset>(s);
    if (m.is_independent(mask)) continue;
    bool minimal = true;
    for (int e = 0; e < m.size() && minimal; ++e) {
      if (subset_contains(mask, e)) minimal = m.is_independent(mask & ~singleton(e));
    }
    if (minimal) result.push_back(mask);
  }
  return result;
}

std::vector<Flat> flats(const Matroid& m) {
  std::vector<Flat> result;
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < count; ++s) {
    const auto mask = static_cast<Subset>(s);
    if (m.is_flat(mask)) result.push_back({mask, m.rank(mask)});
  }
  return result;
}

}  // namespace zeta_arr
