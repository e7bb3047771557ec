#include "dyson/bigint.hpp"

namespace dyson {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt to_integer(const BigRational& value) {
  if (value.get_den() != 1)
    throw NonIntegral("expected an integer, got " + value.get_str());
  return value.get_num();
}

} // namespace dyson
