#include "zeta_arr/zeta.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "zeta_arr/errors.hpp"
#include "zeta_arr/oracle.hpp"
#include "zeta_arr/parallel.hpp"

namespace zeta_arr {

namespace {

void check_degree(std::int64_t max_degree) {
  if (max_degree < 0) throw PreconditionError("truncation degree must be nonnegative");
}

void check_loop_free(const Matroid& m) {
  if (!m.is_loop_free()) {
    throw PreconditionError("matroid has loops " + format_subset(m.loops()));
  }
}

mpq_class power_of(std::uint64_t p, std::int64_t e) {
  mpz_class value;
  mpz_ui_pow_ui(value.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? mpq_class(value) : mpq_class(mpz_class(1), value);
}

std::string matrix_key(const RationalMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << m(r, c).get_str() << ',';
    out << ';';
  }
  return out.str();
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::Global ? "global" : "origin"; }

Variant parse_variant(const std::string& s) {
  if (s == "global") return Variant::Global;
  if (s == "origin") return Variant::Origin;
  throw PreconditionError("unknown variant '" + s + "' (expected global or origin)");
}

WeightVector unit_weight(int n) { return WeightVector(static_cast<std::size_t>(n), 1); }

void check_exponent_vector(const Matroid& m, const WeightVector& u) {
  if (static_cast<int>(u.size()) != m.size()) {
    throw PreconditionError("exponent vector has length " + std::to_string(u.size()) +
                            ", expected " + std::to_string(m.size()));
  }
  for (std::int64_t ui : u) {
    if (ui < 1) throw PreconditionError("exponent vector entries must be positive");
  }
}

ZetaSeries igusa_series(const Matroid& m, const WeightVector& u, std::int64_t max_degree,
                        Variant variant, int threads) {
  check_loop_free(m);
  check_exponent_vector(m, u);
  check_degree(max_degree);
  ZetaSeries series;
  series.coeffs.resize(static_cast<std::size_t>(max_degree) + 1);
  const bool strict = variant == Variant::Origin;
  parallel_chunks(static_cast<std::uint64_t>(max_degree) + 1, threads,
                  [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
                    std::map<std::vector<Subset>, LaurentPoly> chi_cache;
                    for (std::uint64_t degree = begin; degree < end; ++degree) {
                      LaurentPoly coeff;
                      for (const WeightVector& w :
                           lattice_points(m, u, static_cast<std::int64_t>(degree), strict)) {
                        const Matroid mw = initial_matroid(m, w);
                        auto it = chi_cache.find(mw.bases());
                        if (it == chi_cache.end()) {
                          it = chi_cache.emplace(mw.bases(), characteristic_polynomial(mw)).first;
                        }
                        coeff += it->second.shifted(-m.rank() - static_cast<int>(weight(m, w)));
                      }
                      series.coeffs[degree] = std::move(coeff);
                    }
                  });
  return series;
}

ZetaRational igusa_rational(const Matroid& m, const WeightVector& u, Variant variant,
                            std::int64_t check_degree) {
  check_loop_free(m);
  check_exponent_vector(m, u);
  if (!chain_bijection_holds(m, u, check_degree)) {
    throw PreconditionError("chain decomposition does not match the fan lattice points");
  }
  const int d = m.rank();
  const std::int64_t total_u = subset_weight(u, full_set(m.size()));
  ZetaRational z;
  for (const FlagChain& chain : chains(m)) {
    ZetaTerm term;
    term.chain = chain;
    int rank_sum = 0;
    for (std::size_t j = 0; j < chain.length(); ++j) {
      const std::int64_t b = subset_weight(u, chain.flats[j]);
      rank_sum += chain.ranks[j];
      term.t_exponent += b;
      term.denominator.push_back({chain.ranks[j], b});
    }
    term.denominator.push_back({d, total_u});
    term.numerator = characteristic_polynomial(chain_matroid(m, chain)).shifted(-d - rank_sum);
    if (variant == Variant::Origin) {
      term.numerator = term.numerator.shifted(-d);
      term.t_exponent += total_u;
    }
    z.terms.push_back(std::move(term));
  }
  return z;
}

ZetaSeries expand(const ZetaRational& z, std::int64_t max_degree) {
  check_degree(max_degree);
  const auto size = static_cast<std::size_t>(max_degree) + 1;
  ZetaSeries total;
  total.coeffs.resize(size);
  for (const ZetaTerm& term : z.terms) {
    if (term.t_exponent > max_degree) continue;
    std::vector<LaurentPoly> s(size);
    s[static_cast<std::size_t>(term.t_exponent)] = term.numerator;
    for (const DenominatorFactor& f : term.denominator) {
      // multiply by Σ_k L^{-a k} T^{b k}; ascending sweep reuses updated entries
      const auto b = static_cast<std::size_t>(f.t_exponent);
      for (std::size_t t = b; t < size; ++t) {
        if (!s[t - b].is_zero()) s[t] += s[t - b].shifted(-f.l_exponent);
      }
    }
    for (std::size_t t = 0; t < size; ++t) total.coeffs[t] += s[t];
  }
  return total;
}

namespace {

using TPoly = std::vector<LaurentPoly>;

void trim(TPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// p * (1 - L^{-a} T^b)
TPoly times_factor(const TPoly& p, const DenominatorFactor& f) {
  const auto b = static_cast<std::size_t>(f.t_exponent);
  TPoly out(p.size() + b);
  for (std::size_t t = 0; t < p.size(); ++t) {
    out[t] += p[t];
    out[t + b] -= p[t].shifted(-f.l_exponent);
  }
  trim(out);
  return out;
}

// Exact quotient p / (1 - L^{-a} T^b), if there is one.
std::optional<TPoly> divide_by_factor(const TPoly& p, const DenominatorFactor& f) {
  const auto b = static_cast<std::size_t>(f.t_exponent);
  if (p.size() <= b) return std::nullopt;
  TPoly q(p.size() - b);
  for (std::size_t t = 0; t < q.size(); ++t) {
    q[t] = p[t];
    if (t >= b) q[t] += q[t - b].shifted(-f.l_exponent);
  }
  trim(q);
  if (times_factor(q, f) != p) return std::nullopt;
  return q;
}

bool factor_less(const DenominatorFactor& x, const DenominatorFactor& y) {
  return std::pair(x.t_exponent, x.l_exponent) < std::pair(y.t_exponent, y.l_exponent);
}

}  // namespace

ZetaFraction normalize(const ZetaRational& z) {
  std::vector<ZetaFraction::Factor> common;
  auto find = [&](const DenominatorFactor& f) {
    return std::find_if(common.begin(), common.end(), [&](const auto& c) { return c.factor == f; });
  };
  for (const ZetaTerm& term : z.terms) {
    std::vector<ZetaFraction::Factor> counts;
    for (const DenominatorFactor& f : term.denominator) {
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.factor == f; });
      if (it == counts.end()) {
        counts.push_back({f, 1});
      } else {
        ++it->multiplicity;
      }
    }
    for (const auto& c : counts) {
      auto it = find(c.factor);
      if (it == common.end()) {
        common.push_back(c);
      } else {
        it->multiplicity = std::max(it->multiplicity, c.multiplicity);
      }
    }
  }
  std::sort(common.begin(), common.end(),
            [](const auto& x, const auto& y) { return factor_less(x.factor, y.factor); });

  // Terms sharing a denominator are summed before being brought over the
  // common one.
  std::map<std::vector<std::pair<std::int64_t, int>>, TPoly> groups;
  for (const ZetaTerm& term : z.terms) {
    std::vector<std::pair<std::int64_t, int>> key;
    for (const DenominatorFactor& f : term.denominator) key.emplace_back(f.t_exponent, f.l_exponent);
    std::sort(key.begin(), key.end());
    TPoly& p = groups[key];
    const auto t = static_cast<std::size_t>(term.t_exponent);
    if (p.size() <= t) p.resize(t + 1);
    p[t] += term.numerator;
  }
  TPoly numerator;
  for (auto& [key, p] : groups) {
    trim(p);
    for (const auto& c : common) {
      const auto used = std::count(key.begin(), key.end(), std::pair(c.factor.t_exponent, c.factor.l_exponent));
      for (auto k = used; k < c.multiplicity; ++k) p = times_factor(p, c.factor);
    }
    if (numerator.size() < p.size()) numerator.resize(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) numerator[t] += p[t];
  }
  trim(numerator);

  for (auto& c : common) {
    while (c.multiplicity > 0) {
      auto q = divide_by_factor(numerator, c.factor);
      if (!q) break;
      numerator = std::move(*q);
      --c.multiplicity;
    }
  }
  std::erase_if(common, [](const auto& c) { return c.multiplicity == 0; });
  return ZetaFraction{std::move(numerator), std::move(common)};
}

ZetaSeries expand(const ZetaFraction& f, std::int64_t max_degree) {
  ZetaRational single;
  for (std::size_t t = 0; t < f.numerator.size(); ++t) {
    if (f.numerator[t].is_zero()) continue;
    ZetaTerm term;
    term.numerator = f.numerator[t];
    term.t_exponent = static_cast<std::int64_t>(t);
    for (const auto& c : f.denominator) {
      for (int k = 0; k < c.multiplicity; ++k) term.denominator.push_back(c.factor);
    }
    single.terms.push_back(std::move(term));
  }
  return expand(single, max_degree);
}

RationalSeries dl_pointcount_series(const Arrangement& a, const WeightVector& u,
                                    std::int64_t max_degree, Variant variant, int threads) {
  if (a.field().is_rational()) {
    throw PreconditionError("point-count series needs an arrangement over F_p");
  }
  const Matroid& m = a.matroid();
  check_loop_free(m);
  check_exponent_vector(m, u);
  check_degree(max_degree);
  const std::uint64_t p = a.field().prime();
  RationalSeries series;
  series.coeffs.assign(static_cast<std::size_t>(max_degree) + 1, mpq_class(0));
  const bool strict = variant == Variant::Origin;
  parallel_chunks(static_cast<std::uint64_t>(max_degree) + 1, threads,
                  [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
                    std::map<std::string, std::uint64_t> milnor_cache;
                    for (std::uint64_t degree = begin; degree < end; ++degree) {
                      mpq_class coeff = 0;
                      for (const WeightVector& w :
                           lattice_points(m, u, static_cast<std::int64_t>(degree), strict)) {
                        const Arrangement aw = initial_arrangement(a, w);
                        const std::string key = matrix_key(aw.matrix());
                        auto it = milnor_cache.find(key);
                        if (it == milnor_cache.end()) {
                          it = milnor_cache.emplace(key, count_points_milnor(aw, u)).first;
                        }
                        coeff += mpq_class(mpz_class(std::to_string(it->second))) *
                                 power_of(p, -m.rank() - weight(m, w));
                      }
                      series.coeffs[degree] = coeff;
                    }
                  });
  return series;
}

RationalSeries specialize_L(const ZetaSeries& z, const mpq_class& q) {
  if (sgn(q) == 0) throw PreconditionError("cannot specialize L at 0");
  RationalSeries out;
  out.coeffs.reserve(z.coeffs.size());
  for (const LaurentPoly& c : z.coeffs) out.coeffs.push_back(c.evaluate(q));
  return out;
}

}  // namespace zeta_arr
