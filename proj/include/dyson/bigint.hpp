#ifndef DYSON_BIGINT_HPP
#define DYSON_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyson {

using BigInt = mpz_class;

/// Reduced fraction with positive denominator (GMP keeps mpq_class canonical
/// as long as every mutation goes through its operators).
using BigRational = mpq_class;

/// Raised when a rational that must be an integer still has a denominator.
class NonIntegral : public std::domain_error {
public:
  explicit NonIntegral(const std::string& what) : std::domain_error(what) {}
};

BigInt factorial(unsigned n);

/// C(n, k) for arbitrary integers; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Throws NonIntegral if the denominator is not 1.
BigInt to_integer(const BigRational& value);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool fits_int32(const BigInt& v) {
  return v >= INT32_MIN && v <= INT32_MAX;
}

} // namespace dyson

#endif // DYSON_BIGINT_HPP
