#include "zeta_arr/oracle.hpp"

#include <atomic>

#include "zeta_arr/errors.hpp"
#include "zeta_arr/parallel.hpp"

namespace zeta_arr {

namespace {

// Coefficients of the forms over F_p: coeff[k * n + i] is the coefficient of
// coordinate k in form i.
struct FormTable {
  ModPOps ops;
  int d = 0;
  int n = 0;
  std::vector<std::uint64_t> coeff;

  explicit FormTable(const Arrangement& a) : ops{a.field().prime()}, d(a.rank()), n(a.size()) {
    if (a.field().is_rational()) {
      throw PreconditionError("point counting needs an arrangement over F_p");
    }
    coeff.resize(static_cast<std::size_t>(d * n));
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < n; ++i) {
        coeff[static_cast<std::size_t>(k * n + i)] = a.matrix()(k, i).get_num().get_ui();
      }
    }
  }

  std::uint64_t evaluate(int form, const std::uint64_t* point, std::size_t stride = 1) const {
    std::uint64_t value = 0;
    for (int k = 0; k < d; ++k) {
      value = ops.add(value, ops.mul(coeff[static_cast<std::size_t>(k * n + form)],
                                     point[static_cast<std::size_t>(k) * stride]));
    }
    return value;
  }
};

std::uint64_t checked_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (result > (~std::uint64_t{0}) / p) throw BudgetExceeded("point enumeration too large");
    result *= p;
  }
  return result;
}

// Writes the base-p digits of index into digits (least significant first).
void decode_index(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& digits) {
  for (auto& digit : digits) {
    digit = index % p;
    index /= p;
  }
}

void increment(std::vector<std::uint64_t>& digits, std::uint64_t p) {
  for (auto& digit : digits) {
    if (++digit < p) return;
    digit = 0;
  }
}

template <class Predicate>
std::uint64_t count_affine_points(const Arrangement& a, int threads, Predicate&& accept) {
  const FormTable table(a);
  const std::uint64_t p = table.ops.p;
  const std::uint64_t total = checked_power(p, static_cast<std::uint64_t>(table.d));
  std::atomic<std::uint64_t> count{0};
  parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    std::vector<std::uint64_t> point(static_cast<std::size_t>(table.d));
    std::vector<std::uint64_t> values(static_cast<std::size_t>(table.n));
    decode_index(begin, p, point);
    std::uint64_t local = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx, increment(point, p)) {
      for (int i = 0; i < table.n; ++i) values[static_cast<std::size_t>(i)] = table.evaluate(i, point.data());
      if (accept(table.ops, values)) ++local;
    }
    count += local;
  });
  return count.load();
}

bool origin_variant(JetVariant v) {
  return v == JetVariant::NaiveOrigin || v == JetVariant::AngularOrigin;
}

bool angular_variant(JetVariant v) {
  return v == JetVariant::AngularOne || v == JetVariant::AngularOrigin;
}

}  // namespace

std::string jet_variant_name(JetVariant v) {
  switch (v) {
    case JetVariant::NaiveExactOrder: return "naive-exact-order";
    case JetVariant::AngularOne: return "angular-component-one";
    case JetVariant::NaiveOrigin: return "naive-exact-order-origin";
    case JetVariant::AngularOrigin: return "angular-component-one-origin";
  }
  return "unknown";
}

std::uint64_t count_points_complement(const Arrangement& a, int threads) {
  return count_affine_points(a, threads, [](const ModPOps&, const std::vector<std::uint64_t>& v) {
    for (std::uint64_t x : v) {
      if (x == 0) return false;
    }
    return true;
  });
}

std::uint64_t count_points_milnor(const Arrangement& a, const WeightVector& u, int threads) {
  check_exponent_vector(a.matroid(), u);
  return count_affine_points(a, threads, [&](const ModPOps& ops, const std::vector<std::uint64_t>& v) {
    std::uint64_t product = ops.one();
    for (std::size_t i = 0; i < v.size(); ++i) {
      product = ops.mul(product, ops.pow(v[i], static_cast<std::uint64_t>(u[i])));
    }
    return product == ops.one();
  });
}

mpz_class jet_enumeration_size(std::uint64_t p, int d, std::int64_t level, JetVariant variant) {
  const std::int64_t free_levels = origin_variant(variant) ? level : level + 1;
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, static_cast<unsigned long>(free_levels * d));
  return size;
}

JetCountReport jet_count(const Arrangement& a, const WeightVector& u, std::int64_t level,
                         JetVariant variant, std::uint64_t budget, int threads) {
  if (level < 0) throw PreconditionError("jet level must be nonnegative");
  check_exponent_vector(a.matroid(), u);
  const FormTable table(a);
  const std::uint64_t p = table.ops.p;
  const int d = table.d;
  const mpz_class jets = jet_enumeration_size(p, d, level, variant);
  if (jets > mpz_class(std::to_string(budget))) {
    throw BudgetExceeded("jet enumeration of " + jets.get_str() + " jets exceeds budget " +
                         std::to_string(budget));
  }
  const auto len = static_cast<std::size_t>(level) + 1;
  const std::size_t first_free = origin_variant(variant) ? 1 : 0;
  const bool angular = angular_variant(variant);
  const std::uint64_t total = jets.get_ui();
  std::atomic<std::uint64_t> count{0};

  parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    const ModPOps& ops = table.ops;
    // jet[k * len + m] is the π^m coefficient of coordinate k
    std::vector<std::uint64_t> jet(static_cast<std::size_t>(d) * len, 0);
    std::vector<std::uint64_t> free_digits(static_cast<std::size_t>(d) * (len - first_free));
    std::vector<std::uint64_t> form(len), product(len), scratch(len);
    decode_index(begin, p, free_digits);
    std::uint64_t local = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx, increment(free_digits, p)) {
      std::size_t digit = 0;
      for (int k = 0; k < d; ++k) {
        for (std::size_t m = first_free; m < len; ++m) jet[static_cast<std::size_t>(k) * len + m] = free_digits[digit++];
      }
      std::fill(product.begin(), product.end(), 0);
      product[0] = ops.one();
      for (int i = 0; i < table.n; ++i) {
        for (std::size_t m = 0; m < len; ++m) form[m] = table.evaluate(i, jet.data() + m, len);
        for (std::int64_t power = 0; power < u[static_cast<std::size_t>(i)]; ++power) {
          std::fill(scratch.begin(), scratch.end(), 0);
          for (std::size_t x = 0; x < len; ++x) {
            if (product[x] == 0) continue;
            for (std::size_t y = 0; x + y < len; ++y) {
              scratch[x + y] = ops.add(scratch[x + y], ops.mul(product[x], form[y]));
            }
          }
          product.swap(scratch);
        }
      }
      bool lower_vanish = true;
      for (std::size_t m = 0; m + 1 < len && lower_vanish; ++m) lower_vanish = product[m] == 0;
      if (!lower_vanish) continue;
      const std::uint64_t leading = product[len - 1];
      if (angular ? leading == ops.one() : leading != 0) ++local;
    }
    count += local;
  });

  JetCountReport report;
  report.p = p;
  report.level = level;
  report.variant = variant;
  report.count = mpz_class(std::to_string(count.load()));
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), p, static_cast<unsigned long>((level + 1) * d));
  report.normalized = mpq_class(report.count, denominator);
  report.normalized.canonicalize();
  return report;
}

bool VerifyReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport verify(const Arrangement& a, const WeightVector& u,
                    const std::vector<std::uint64_t>& primes, std::int64_t max_degree,
                    std::uint64_t budget, int threads) {
  if (!a.field().is_rational()) throw PreconditionError("verify needs an arrangement over Q");
  check_exponent_vector(a.matroid(), u);
  if (max_degree < 0) throw PreconditionError("truncation degree must be nonnegative");
  const JetVariant variants[] = {JetVariant::NaiveExactOrder, JetVariant::AngularOne,
                                 JetVariant::NaiveOrigin, JetVariant::AngularOrigin};
  std::vector<Arrangement> reduced;
  for (std::uint64_t p : primes) {
    reduced.push_back(reduce_mod_p(a, p));
    for (std::int64_t level = 0; level <= max_degree; ++level) {
      for (JetVariant v : variants) {
        if (jet_enumeration_size(p, a.rank(), level, v) > mpz_class(std::to_string(budget))) {
          throw BudgetExceeded("jet budget " + std::to_string(budget) + " too small for p=" +
                               std::to_string(p) + ", level " + std::to_string(level));
        }
      }
    }
  }

  VerifyReport report;
  if (primes.empty()) return report;
  const ZetaSeries naive_global = igusa_series(a.matroid(), u, max_degree, Variant::Global, threads);
  const ZetaSeries naive_origin = igusa_series(a.matroid(), u, max_degree, Variant::Origin, threads);
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const std::uint64_t p = primes[k];
    const Arrangement& ap = reduced[k];
    const mpq_class q(mpz_class(std::to_string(p)));
    const RationalSeries expected[] = {
        specialize_L(naive_global, q),
        dl_pointcount_series(ap, u, max_degree, Variant::Global, threads),
        specialize_L(naive_origin, q),
        dl_pointcount_series(ap, u, max_degree, Variant::Origin, threads),
    };
    for (std::int64_t level = 0; level <= max_degree; ++level) {
      for (std::size_t vi = 0; vi < 4; ++vi) {
        const auto jets = jet_count(ap, u, level, variants[vi], budget, threads);
        VerifyCheck check;
        check.p = p;
        check.level = level;
        check.variant = variants[vi];
        check.expected = expected[vi].coeffs[static_cast<std::size_t>(level)];
        check.actual = jets.normalized;
        check.pass = check.expected == check.actual;
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

}  // namespace zeta_arr
