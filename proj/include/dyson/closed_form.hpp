#ifndef DYSON_CLOSED_FORM_HPP
#define DYSON_CLOSED_FORM_HPP

// Closed forms for coefficients of the Dyson product and their q-analogues.
// Indices are 0-based throughout: index r names the variable x_{r+1}.
//
//   constant       [1]               sigma!/prod a_i!
//   thm1 (r,s)     [x_r/x_s]         n >= 2
//   thm2 (r,s,t)   [x_r^2/(x_s x_t)] n >= 3
//   thm3 (r,s,t,u) [x_r x_s/(x_t x_u)] n >= 4
//
// The q-analogues conj1..conj3 carry extra powers q^L and q^M given by case
// tables on the relative order of the indices.

#include "dyson/bigint.hpp"
#include "dyson/qpoly.hpp"
#include "dyson/qproduct.hpp"
#include "dyson/vectors.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace dyson {

enum class CoeffFamily { constant, thm1, thm2, thm3 };

std::string_view family_name(CoeffFamily f);
/// Number of distinct indices the family takes (0, 2, 3, 4).
std::size_t index_count(CoeffFamily f);
/// Smallest admissible arity (1, 2, 3, 4).
std::size_t min_arity(CoeffFamily f);

/// Which monomial a closed form describes.
struct CoeffSpec {
  CoeffFamily family;
  std::vector<std::size_t> indices;
  std::size_t n;

  /// Throws std::invalid_argument for wrong count, repeats, out-of-range
  /// indices or an arity below the family's floor.
  void validate() const;
  /// Exponent vector of the monomial: 0, e_r-e_s, 2e_r-e_s-e_t, e_r+e_s-e_t-e_u.
  ExpVec target() const;
};

/// Every admissible ordered index tuple for the family at arity n.
std::vector<CoeffSpec> all_specs(CoeffFamily f, std::size_t n);

struct LMValue {
  long L = 0;
  std::optional<long> M;
};

BigInt dyson_constant(const AVec& a);
QPoly qdyson_constant(const AVec& a);

BigRational thm1_rational(const AVec& a, std::size_t r, std::size_t s);
BigRational thm2_rational(const AVec& a, std::size_t r, std::size_t s, std::size_t t);
BigRational thm3_rational(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u);

/// Integer values of the classical closed forms; NonIntegral if a
/// denominator survives (never expected).
BigInt thm1_value(const AVec& a, std::size_t r, std::size_t s);
BigInt thm2_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t);
BigInt thm3_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u);

long L_rs(const AVec& a, std::size_t r, std::size_t s);
/// s and t may come in either order.
LMValue LM_rst(const AVec& a, std::size_t r, std::size_t s, std::size_t t);
/// (r,s) and (t,u) may each come in either order.
LMValue LM_rstu(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u);

/// -q^L (1-q^{a_s})/(1-q^{1+sigma-a_s}), without the q-multinomial factor.
QProductForm conj1_form(const AVec& a, std::size_t r, std::size_t s);

/// Exact q-polynomial values; NotDivisible flags a failed instance.
QPoly conj1_value(const AVec& a, std::size_t r, std::size_t s);
QPoly conj2_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t);
QPoly conj3_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u);

/// Dispatch on a validated spec.
BigInt classical_value(const CoeffSpec& spec, const AVec& a);
QPoly q_value(const CoeffSpec& spec, const AVec& a);

} // namespace dyson

#endif // DYSON_CLOSED_FORM_HPP
