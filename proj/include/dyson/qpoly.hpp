#ifndef DYSON_QPOLY_HPP
#define DYSON_QPOLY_HPP

#include "dyson/bigint.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyson {

/// Raised by exact division when the remainder is nonzero.
class NotDivisible : public std::domain_error {
public:
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// Dense univariate polynomial in q with big-integer coefficients.
/// Index i holds the coefficient of q^i; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class QPoly {
public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT: integers embed implicitly
  QPoly(const BigInt& constant);  // NOLINT
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  /// c * q^k
  static QPoly monomial(const BigInt& c, unsigned k);
  /// 1 - q^m
  static QPoly one_minus_q_pow(unsigned m);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i, zero past the degree.
  BigInt operator[](std::size_t i) const;

  BigInt eval_at_one() const;
  BigInt eval(const BigInt& q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  /// Multiply by q^k.
  QPoly shifted(unsigned k) const;
  QPoly operator-() const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Canonical text: ascending powers, "1 + 2*q - q^2"; "0" for zero.
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Big-integer schoolbook product; reference for the kernel-backed operator*.
QPoly mul_reference(const QPoly& lhs, const QPoly& rhs);

/// Quotient of p by d; throws NotDivisible unless the remainder is zero,
/// std::invalid_argument if d is zero.
QPoly div_exact(const QPoly& p, const QPoly& d);

} // namespace dyson

#endif // DYSON_QPOLY_HPP
