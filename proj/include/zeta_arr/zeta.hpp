#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeta_arr/fan.hpp"
#include "zeta_arr/laurent.hpp"
#include "zeta_arr/matroid.hpp"
#include "zeta_arr/realization.hpp"

namespace zeta_arr {

// global: sum over w >= 0; origin: sum over w > 0.
enum class Variant { Global, Origin };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Coefficients of T^0..T^D.
struct ZetaSeries {
  std::vector<LaurentPoly> coeffs;

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  friend bool operator==(const ZetaSeries&, const ZetaSeries&) = default;
};

// Series with exact rational coefficients (after L := q, or point counts).
struct RationalSeries {
  std::vector<mpq_class> coeffs;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

struct DenominatorFactor {
  int l_exponent = 0;        // a in (1 - L^{-a} T^b)
  std::int64_t t_exponent = 0;  // b

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

// numerator * T^t_exponent / Π (1 - L^{-a_j} T^{b_j})
struct ZetaTerm {
  FlagChain chain;
  LaurentPoly numerator;
  std::int64_t t_exponent = 0;
  std::vector<DenominatorFactor> denominator;
};

struct ZetaRational {
  std::vector<ZetaTerm> terms;
};

// All-ones weight of length n.
WeightVector unit_weight(int n);

// Throws PreconditionError unless u has length n and positive entries.
void check_exponent_vector(const Matroid& m, const WeightVector& u);

// Coefficient of T^l is Σ χ_{M_w}(L) L^{-d - wt(w)} over fan points w with
// u·w = l (w >= 0 for global, w > 0 for origin). Degrees are split across
// `threads` workers; the result does not depend on the split.
ZetaSeries igusa_series(const Matroid& m, const WeightVector& u, std::int64_t max_degree,
                        Variant variant, int threads = 1);

// Closed form: one term per chain of flats. Runs the chain bijection check up
// to `check_degree` first and throws PreconditionError if it fails.
ZetaRational igusa_rational(const Matroid& m, const WeightVector& u, Variant variant,
                            std::int64_t check_degree = 6);

ZetaSeries expand(const ZetaRational& z, std::int64_t max_degree);

// Single fraction Σ_k numerator[k] T^k / Π (1 - L^{-a} T^b)^multiplicity.
struct ZetaFraction {
  struct Factor {
    DenominatorFactor factor;
    int multiplicity = 0;

    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<LaurentPoly> numerator;
  std::vector<Factor> denominator;  // sorted by (b, a)

  friend bool operator==(const ZetaFraction&, const ZetaFraction&) = default;
};

// Brings the terms over their least common denominator, then cancels every
// denominator factor that divides the numerator exactly.
ZetaFraction normalize(const ZetaRational& z);

ZetaSeries expand(const ZetaFraction& f, std::int64_t max_degree);

// Coefficient of T^l is Σ #{t ∈ F_p^d : Π f_i^{(w)}(t)^{u_i} = 1} p^{-d-wt(w)}
// over fan points w with u·w = l, where f^{(w)} are the forms of the initial
// arrangement at w. `a` must be defined over F_p.
RationalSeries dl_pointcount_series(const Arrangement& a, const WeightVector& u,
                                    std::int64_t max_degree, Variant variant, int threads = 1);

RationalSeries specialize_L(const ZetaSeries& z, const mpq_class& q);

}  // namespace zeta_arr
