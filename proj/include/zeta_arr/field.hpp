#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zeta_arr {

bool is_prime(std::uint64_t p);

// Either Q (prime == 0) or F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  // Throws PreconditionError unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rational() const { return prime_ == 0; }
  std::uint64_t prime() const { return prime_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

// Arithmetic policies consumed by the templated elimination routines.

struct RationalOps {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type neg(const value_type& a) const { return -a; }

  value_type from_rational(const mpq_class& q) const { return q; }
  mpq_class to_rational(const value_type& a) const { return a; }
};

struct ModPOps {
  using value_type = std::uint64_t;

  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }

  // Throws BadPrimeError when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& q) const;
  mpq_class to_rational(value_type a) const { return mpq_class(mpz_class(a)); }
};

}  // namespace zeta_arr
