#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace zeta_arr {

// Integer Laurent polynomial in the symbol L (the class of the affine line).
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, mpz_class>;

  LaurentPoly() = default;

  static LaurentPoly monomial(const mpz_class& coeff, int exponent);
  static LaurentPoly constant(const mpz_class& c) { return monomial(c, 0); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int exponent) const;

  // Highest / lowest exponent; 0 for the zero polynomial.
  int max_exponent() const;
  int min_exponent() const;

  void add_term(const mpz_class& coeff, int exponent);

  // Multiplies by L^k.
  LaurentPoly shifted(int k) const;

  mpq_class evaluate(const mpq_class& q) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // e.g. "L^2 - 3*L + 2 - L^-1"; "0" for zero.
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace zeta_arr
