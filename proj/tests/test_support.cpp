#include "test_support.hpp"

#include <random>

#include "zeta_arr/errors.hpp"

namespace zeta_arr::testing {

std::vector<Matroid> random_matroids(int count, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Matroid> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const int d = std::uniform_int_distribution<int>(1, n)(rng);
    RationalMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < n; ++c) {
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            std::uniform_int_distribution<int>(-2, 2)(rng);
      }
    }
    try {
      out.push_back(column_matroid(m, FieldSpec::rationals()));
    } catch (const PreconditionError&) {
      // zero column or rank deficient; draw again
    }
  }
  return out;
}

std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out;
  for (const auto& entry : battery()) out.push_back(entry.arrangement.matroid());
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) out.push_back(Matroid::uniform(d, n));
  }
  for (auto& m : random_matroids(12, 6, 7)) out.push_back(std::move(m));
  return out;
}

}  // namespace zeta_arr::testing
