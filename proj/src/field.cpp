#include "zeta_arr/field.hpp"

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(prime_);
}

ModPOps::value_type ModPOps::pow(value_type a, std::uint64_t e) const {
  value_type result = one();
  value_type base = a % p;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

ModPOps::value_type ModPOps::inv(value_type a) const {
  if (a % p == 0) throw PreconditionError("division by zero in F_" + std::to_string(p));
  return pow(a, p - 2);
}

ModPOps::value_type ModPOps::from_rational(const mpq_class& q) const {
  const mpz_class modulus(static_cast<unsigned long>(p));
  mpz_class num, den;
  mpz_mod(num.get_mpz_t(), q.get_num_mpz_t(), modulus.get_mpz_t());
  mpz_mod(den.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t());
  if (den == 0) {
    throw BadPrimeError("bad prime " + std::to_string(p) + ": denominator of " + q.get_str() +
                        " vanishes");
  }
  return div(num.get_ui(), den.get_ui());
}

}  // namespace zeta_arr
