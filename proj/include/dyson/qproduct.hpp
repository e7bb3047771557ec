#ifndef DYSON_QPRODUCT_HPP
#define DYSON_QPRODUCT_HPP

#include "dyson/qpoly.hpp"

#include <string>
#include <vector>

namespace dyson {

/// sign * q^qexp * prod_{m in num} (1 - q^m) / prod_{d in den} (1 - q^d).
///
/// A numerator entry of 0 makes the whole value zero; denominator entries
/// must be positive.
struct QProductForm {
  int sign = 1;
  unsigned qexp = 0;
  std::vector<unsigned> num;
  std::vector<unsigned> den;

  /// Throws std::invalid_argument if sign is not +-1 or a den entry is 0.
  void validate() const;

  /// Removes factors shared by num and den; the value is unchanged.
  QProductForm cancelled() const;

  /// Exact value times `cofactor`, divided once at the end.
  /// Throws NotDivisible when the result is not a polynomial.
  QPoly to_qpoly(const QPoly& cofactor = 1) const;

  std::string to_string() const;
};

QProductForm operator*(const QProductForm& lhs, const QProductForm& rhs);

/// Cross-multiplied equality; never divides.
bool equivalent(const QProductForm& lhs, const QProductForm& rhs);

} // namespace dyson

#endif // DYSON_QPRODUCT_HPP
