// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "test_support.hpp"
#include "zeta_arr/commands.hpp"
#include "zeta_arr/errors.hpp"
#include "zeta_arr/fan.hpp"
#include "zeta_arr/oracle.hpp"
#include "zeta_arr/zeta.hpp"

using namespace zeta_arr;
using namespace zeta_arr::testing;

namespace {

const int kThreads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

struct Outcome {
  bool pass = true;
  std::uint64_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result.pass = false;
    result.first_failure = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start).count();
  std::cout << (result.pass ? "PASS" : "FAIL") << " [" << number << "] " << title << " ("
            << result.checks << " checks, " << ms << " ms)";
  if (!result.pass) std::cout << ": " << result.first_failure;
  std::cout << std::endl;
  if (!result.pass) ++failures;
}

struct Target {
  std::string name;
  Arrangement arrangement;
};

std::vector<Target> jet_targets() {
  return {{"{x}", line_arrangement()},
          {"{x,y}", boolean_arrangement(2)},
          {"{x,y,x+y}", u23_arrangement()},
          {"K4", k4_arrangement()}};
}

const std::vector<std::uint64_t> kPrimes = {2, 3};
constexpr std::int64_t kJetLevels = 3;

std::string where(const std::string& name, std::uint64_t p, std::int64_t level, JetVariant v) {
  return name + " p=" + std::to_string(p) + " l=" + std::to_string(level) + " " + jet_variant_name(v);
}

// Naive jets against the specialized motivic series.
void check_naive(Outcome& out, const Target& t, Variant variant, JetVariant jets) {
  const Matroid& m = t.arrangement.matroid();
  const WeightVector u = unit_weight(m.size());
  const ZetaSeries series = igusa_series(m, u, kJetLevels, variant, kThreads);
  for (std::uint64_t p : kPrimes) {
    const Arrangement reduced = reduce_mod_p(t.arrangement, p);
    const RationalSeries expected = specialize_L(series, mpq_class(static_cast<long>(p)));
    for (std::int64_t l = 0; l <= kJetLevels; ++l) {
      const JetCountReport r = jet_count(reduced, u, l, jets, kDefaultJetBudget, kThreads);
      out.expect(r.normalized == expected.coeffs[static_cast<std::size_t>(l)], where(t.name, p, l, jets));
    }
  }
}

// Angular-component-one jets against the point-count series.
void check_angular(Outcome& out, const Target& t, Variant variant, JetVariant jets) {
  const Matroid& m = t.arrangement.matroid();
  const WeightVector u = unit_weight(m.size());
  for (std::uint64_t p : kPrimes) {
    const Arrangement reduced = reduce_mod_p(t.arrangement, p);
    const RationalSeries expected = dl_pointcount_series(reduced, u, kJetLevels, variant, kThreads);
    for (std::int64_t l = 0; l <= kJetLevels; ++l) {
      const JetCountReport r = jet_count(reduced, u, l, jets, kDefaultJetBudget, kThreads);
      out.expect(r.normalized == expected.coeffs[static_cast<std::size_t>(l)], where(t.name, p, l, jets));
    }
  }
}

// Smallest u·w over strictly positive w in the Bergman fan, by direct search.
std::int64_t min_origin_degree(const Matroid& m, const WeightVector& u) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < u.size(); ++i) best += u[i];
  for_each_weight(m.size(), best, [&](const WeightVector& w0) {
    WeightVector w = w0;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] += 1;
      deg += u[i] * w[i];
    }
    if (deg < best && in_bergman_fan(m, w)) best = deg;
  });
  return best;
}

// ((L-1)/(L-T))^n = (1-L^-1)^n Σ_k C(n+k-1,k) L^-k T^k
ZetaSeries normal_crossings(int n, std::int64_t max_degree) {
  LaurentPoly base = LaurentPoly::constant(1);
  for (int i = 0; i < n; ++i) {
    LaurentPoly factor = LaurentPoly::constant(1);
    factor -= LaurentPoly::monomial(1, -1);
    base *= factor;
  }
  ZetaSeries out;
  for (std::int64_t k = 0; k <= max_degree; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
    LaurentPoly c = base.shifted(static_cast<int>(-k));
    c *= LaurentPoly::constant(binom);
    out.coeffs.push_back(c);
  }
  return out;
}

using TPoly = std::vector<LaurentPoly>;

// p * (1 - L^{-a} T^b), trailing zeros removed
TPoly times_one_minus(const TPoly& p, int a, std::int64_t b) {
  TPoly out(p.size() + static_cast<std::size_t>(b));
  for (std::size_t t = 0; t < p.size(); ++t) {
    out[t] += p[t];
    out[t + static_cast<std::size_t>(b)] -= p[t].shifted(-a);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

WeightVector random_exponents(int n, std::mt19937& rng) {
  WeightVector u(static_cast<std::size_t>(n));
  for (auto& x : u) x = std::uniform_int_distribution<int>(1, 3)(rng);
  return u;
}

std::string run_cli_capture(const std::vector<std::string>& args) {
  std::vector<std::string> storage = {"zeta-arr"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) throw Error("cli exited with " + std::to_string(code) + ": " + err.str());
  return out.str();
}

}  // namespace

int main() {
  criterion(1, "naive jets match the specialized Igusa series", [] {
    Outcome out;
    for (const Target& t : jet_targets()) check_naive(out, t, Variant::Global, JetVariant::NaiveExactOrder);
    return out;
  });

  criterion(2, "angular-component-one jets match the point-count series", [] {
    Outcome out;
    for (const Target& t : jet_targets()) check_angular(out, t, Variant::Global, JetVariant::AngularOne);
    return out;
  });

  criterion(3, "origin jets match the origin series, which vanish below the minimal degree", [] {
    Outcome out;
    for (const Target& t : jet_targets()) {
      check_naive(out, t, Variant::Origin, JetVariant::NaiveOrigin);
      check_angular(out, t, Variant::Origin, JetVariant::AngularOrigin);
      const Matroid& m = t.arrangement.matroid();
      const WeightVector u = unit_weight(m.size());
      const std::int64_t low = min_origin_degree(m, u);
      const ZetaSeries s = igusa_series(m, u, low, Variant::Origin, kThreads);
      for (std::int64_t l = 0; l < low; ++l) {
        out.expect(s.coeffs[static_cast<std::size_t>(l)].is_zero(), t.name + " origin l=" + std::to_string(l));
      }
      out.expect(!s.coeffs[static_cast<std::size_t>(low)].is_zero(), t.name + " origin at minimal degree");
      if (t.name == "{x,y,x+y}") out.expect(low == 3, "U(2,3) minimal origin degree is 3");
    }
    return out;
  });

  criterion(4, "closed form expands to the series up to degree 12", [] {
    Outcome out;
    std::mt19937 rng(2024);
    for (const auto& entry : battery()) {
      const Matroid& m = entry.arrangement.matroid();
      for (const WeightVector& u : {unit_weight(m.size()), random_exponents(m.size(), rng)}) {
        for (Variant v : {Variant::Global, Variant::Origin}) {
          out.expect(expand(igusa_rational(m, u, v), 12) == igusa_series(m, u, 12, v, kThreads),
                     entry.name + " " + variant_name(v));
        }
      }
    }
    return out;
  });

  criterion(5, "Boolean matroids give ((L-1)/(L-T))^n", [] {
    Outcome out;
    for (int n = 1; n <= 4; ++n) {
      const ZetaRational z = igusa_rational(Matroid::boolean(n), unit_weight(n), Variant::Global);
      const ZetaFraction f = normalize(z);
      const std::string tag = "n=" + std::to_string(n);
      out.expect(expand(z, 12) == normal_crossings(n, 12), tag + " expansion");
      out.expect(expand(f, 12) == normal_crossings(n, 12), tag + " normalized expansion");
      // numerator * (1 - L^-1 T)^n == (1 - L^-1)^n * denominator
      TPoly lhs = f.numerator;
      TPoly rhs = {normal_crossings(n, 0).coeffs[0]};
      for (int k = 0; k < n; ++k) lhs = times_one_minus(lhs, 1, 1);
      for (const auto& c : f.denominator) {
        for (int k = 0; k < c.multiplicity; ++k) rhs = times_one_minus(rhs, c.factor.l_exponent, c.factor.t_exponent);
      }
      out.expect(lhs == rhs, tag + " cross-multiplied");
    }
    return out;
  });

  criterion(6, "characteristic polynomial counts complement points", [] {
    Outcome out;
    for (const auto& entry : battery()) {
      const LaurentPoly chi = characteristic_polynomial(entry.arrangement.matroid());
      for (std::uint64_t q : {2, 3, 5}) {
        Arrangement reduced = entry.arrangement;
        try {
          reduced = reduce_mod_p(entry.arrangement, q);
        } catch (const BadPrimeError&) {
          continue;
        }
        const mpq_class count(mpz_class(static_cast<unsigned long>(count_points_complement(reduced, kThreads))));
        out.expect(chi.evaluate(mpq_class(static_cast<long>(q))) == count,
                   entry.name + " q=" + std::to_string(q));
      }
    }
    return out;
  });

  criterion(7, "matroid core properties", [] {
    Outcome out;
    for (const Matroid& m : small_matroids()) {
      if (m.size() > 6) continue;
      for_each_weight(m.size(), 5, [&](const WeightVector& w) {
        const Matroid mw = initial_matroid(m, w);
        out.expect(satisfies_basis_exchange(mw.size(), mw.bases()), "initial matroid exchange");
        for (Subset b : mw.bases()) {
          for (int i = 0; i < m.size(); ++i) {
            if (subset_contains(b, i)) continue;
            const Subset c = fundamental_circuit(m, i, b);
            bool at_added = true;
            for (int j = 0; j < m.size(); ++j) {
              if (subset_contains(c, j) && w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)]) {
                at_added = false;
              }
            }
            out.expect(at_added, "fundamental circuit minimum");
          }
        }
      });
      for_each_weight(m.size(), 6, [&](const WeightVector& w) {
        out.expect(in_bergman_fan_level_sets(m, w) == in_bergman_fan(m, w), "level-set fan test");
      });
    }
    std::mt19937 rng(7);
    for (const auto& entry : battery()) {
      const Matroid& m = entry.arrangement.matroid();
      for (const WeightVector& u : {unit_weight(m.size()), random_exponents(m.size(), rng)}) {
        out.expect(chain_bijection_holds(m, u, 8), entry.name + " chain bijection");
      }
    }
    return out;
  });

  criterion(8, "JSON output is identical across runs and thread counts", [] {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "zeta_arr_acceptance";
    std::filesystem::create_directories(dir);
    const auto input = dir / "k4.json";
    std::ofstream(input, std::ios::trunc)
        << R"({"field": "Q", "matrix": [["1","0","0","1","1","0"],["0","1","0","-1","0","1"],["0","0","1","0","-1","-1"]]})";
    const std::vector<std::vector<std::string>> jobs = {
        {"inspect"},
        {"zeta", "--degree", "10", "--u", "1,2,1,3,1,2"},
        {"zeta", "--degree", "8", "--variant", "origin"},
        {"dl", "--degree", "5", "--primes", "2,3,5"},
        {"verify", "--degree", "2", "--primes", "2,3"}};
    for (const auto& job : jobs) {
      std::vector<std::string> args = job;
      args.insert(args.end(), {"--input", input.string(), "--threads"});
      std::vector<std::string> single = args, many = args;
      single.push_back("1");
      many.push_back("8");
      const std::string reference = run_cli_capture(single);
      out.expect(run_cli_capture(single) == reference, job[0] + " repeated");
      out.expect(run_cli_capture(many) == reference, job[0] + " threads");
    }
    std::filesystem::remove_all(dir);
    return out;
  });

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
