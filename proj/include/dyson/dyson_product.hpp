#ifndef DYSON_DYSON_PRODUCT_HPP
#define DYSON_DYSON_PRODUCT_HPP

// Expansion of the Dyson product
//   F_n(x; a) = prod_{i<j} (1 - x_i/x_j)^{a_j} (1 - x_j/x_i)^{a_i}
// and its q-deformation
//   F_n(x; a; q) = prod_{i<j} (x_i q/x_j; q)_{a_j} (x_j/x_i; q)_{a_i}.
//
// Every factor is a binomial power in a single ratio x_up/x_down, expanded
// from one row of (Gaussian) binomial coefficients.

#include "dyson/laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dyson {

class ResourceLimitExceeded : public std::runtime_error {
public:
  explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ExpansionLimits {
  static constexpr std::size_t kDefaultMaxTerms = 50'000'000;
  std::size_t max_terms = kDefaultMaxTerms;

  /// Default cap, overridden by DYSON_TERM_CAP when set to a positive integer.
  static ExpansionLimits from_env();
};

struct ExpansionStats {
  std::size_t peak_terms = 0;
  std::size_t final_terms = 0;
};

/// (1 - x_up/x_down)^power, or its q-analogue.
struct BinomialFactor {
  std::size_t up;
  std::size_t down;
  int power;
  /// True for (x_up q/x_down; q)_power, false for (x_up/x_down; q)_power.
  bool q_shifted;
};

/// Factors of the product in pair order (1,2), (1,3), ..., (n-1,n); each
/// pair contributes the x_i/x_j factor then the x_j/x_i one. Zero powers are
/// dropped.
std::vector<BinomialFactor> dyson_factors(const AVec& a);

/// Coefficients of (x_up/x_down)^k, k = 0..power.
std::vector<BigInt> classical_row(const BinomialFactor& f);
std::vector<QPoly> q_row(const BinomialFactor& f);

LaurentPoly<BigInt> build_dyson(const AVec& a, const ExpansionLimits& limits = ExpansionLimits::from_env(),
                                ExpansionStats* stats = nullptr);
LaurentPoly<QPoly> build_qdyson(const AVec& a, const ExpansionLimits& limits = ExpansionLimits::from_env(),
                                ExpansionStats* stats = nullptr);

/// [x^b] F_n(x; a) without building the full product: partial monomials that
/// can no longer reach b given the remaining factors are discarded.
BigInt dyson_coeff_pruned(const AVec& a, const ExpVec& b,
                          const ExpansionLimits& limits = ExpansionLimits::from_env(),
                          ExpansionStats* stats = nullptr);
QPoly qdyson_coeff_pruned(const AVec& a, const ExpVec& b,
                          const ExpansionLimits& limits = ExpansionLimits::from_env(),
                          ExpansionStats* stats = nullptr);

} // namespace dyson

#endif // DYSON_DYSON_PRODUCT_HPP
