#ifndef DYSON_GOOD_RECURRENCE_HPP
#define DYSON_GOOD_RECURRENCE_HPP

// Coefficients c_n^b(a) = [x^b] F_n(x; a) computed without expanding anything:
//
//   sum(b) != 0          -> 0
//   n == 1               -> [b == 0]
//   all a_k > 0          -> sum_k c_n^b(a - e_k)          (Lagrange interpolation)
//   some a_k == 0        -> drop x_k, see boundary_expand  (smallest such k)

#include "dyson/bigint.hpp"
#include "dyson/vectors.hpp"

#include <unordered_map>
#include <vector>

namespace dyson {

/// One term of the arity-reducing expansion: coeff * c_{n-1}^{child}(a without a_k).
struct BoundaryTerm {
  BigInt coeff;
  ExpVec child;
};

/// Requires a[k] == 0. Uses
///   [x_k^{b_k}] prod_{i != k} (1 - x_k/x_i)^{a_i}
///     = (-1)^{b_k} sum_{m : sum m_i = b_k} prod C(a_i, m_i) x_i^{-m_i},
/// mapping each composition m to the child exponent b_i + m_i (i != k).
/// Empty when b_k < 0; a single unit term with b minus position k when b_k == 0.
std::vector<BoundaryTerm> boundary_expand(std::size_t k, const ExpVec& b, const AVec& a);

class GoodEvaluator {
public:
  explicit GoodEvaluator(bool memoize = true) : memoize_(memoize) {}

  BigInt coeff(const ExpVec& b, const AVec& a);

  std::size_t memo_size() const { return memo_.size(); }
  /// Recursive calls made, including memo hits.
  std::size_t calls() const { return calls_; }

private:
  bool memoize_;
  std::size_t calls_ = 0;
  std::unordered_map<ExpVec, BigInt, ExpVecHash> memo_;
};

/// Fresh memoized evaluation.
BigInt good_coeff(const ExpVec& b, const AVec& a);

} // namespace dyson

#endif // DYSON_GOOD_RECURRENCE_HPP
