#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "zeta_arr/realization.hpp"
#include "zeta_arr/zeta.hpp"

namespace zeta_arr {

inline constexpr std::uint64_t kDefaultJetBudget = 100'000'000;

enum class JetVariant {
  NaiveExactOrder,     // ord_π f = l exactly
  AngularOne,          // f ≡ π^l mod π^{l+1}
  NaiveOrigin,         // as NaiveExactOrder with t(0) = 0
  AngularOrigin,       // as AngularOne with t(0) = 0
};

std::string jet_variant_name(JetVariant v);

struct JetCountReport {
  std::uint64_t p = 0;
  std::int64_t level = 0;
  JetVariant variant = JetVariant::NaiveExactOrder;
  mpz_class count;
  mpq_class normalized;  // count / p^{(l+1)d}
};

// #{t ∈ F_p^d : f_i(t) != 0 for all i}
std::uint64_t count_points_complement(const Arrangement& a, int threads = 1);

// #{t ∈ F_p^d : Π f_i(t)^{u_i} = 1}
std::uint64_t count_points_milnor(const Arrangement& a, const WeightVector& u, int threads = 1);

// Number of jets enumerated for the given parameters.
mpz_class jet_enumeration_size(std::uint64_t p, int d, std::int64_t level, JetVariant variant);

// Enumerates level-l jets of F_p^d and counts those satisfying the variant's
// condition on f = Π f_i^{u_i}. Throws BudgetExceeded when more than
// `budget` jets would be evaluated.
JetCountReport jet_count(const Arrangement& a, const WeightVector& u, std::int64_t level,
                         JetVariant variant, std::uint64_t budget = kDefaultJetBudget,
                         int threads = 1);

struct VerifyCheck {
  std::uint64_t p = 0;
  std::int64_t level = 0;
  JetVariant variant = JetVariant::NaiveExactOrder;
  mpq_class expected;
  mpq_class actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool pass() const;
};

// For each prime and each l <= max_degree compares the four jet counts with
// the specialized Igusa series and the point-count series. `a` is over Q.
// BadPrimeError / BudgetExceeded propagate.
VerifyReport verify(const Arrangement& a, const WeightVector& u,
                    const std::vector<std::uint64_t>& primes, std::int64_t max_degree,
                    std::uint64_t budget = kDefaultJetBudget, int threads = 1);

}  // namespace zeta_arr
