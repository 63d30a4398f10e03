#include "zeta_arr/laurent.hpp"

#include <sstream>

namespace zeta_arr {

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(coeff, exponent);
  return p;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void LaurentPoly::add_term(const mpz_class& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

mpq_class LaurentPoly::evaluate(const mpq_class& q) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power = 1;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    power = e >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    power.canonicalize();
    sum += power * c;
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) product.add_term(ca * cb, ea + eb);
  }
  *this = std::move(product);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "L";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace zeta_arr
