#ifndef DYSON_QDIXON_HPP
#define DYSON_QDIXON_HPP

// The three-variable case. Expanding each pair of the q-Dyson product
// F_3(<x,y,z>; <a,b,c>; q) with Rothe's q-binomial theorem and eliminating two
// of the three summation indices gives, with C(m,2) = m(m-1)/2,
//
//   [x^alpha y^beta z^{-alpha-beta}] F_3
//     = sum_k [a+b, k+b+beta] [b+c, k+c] [c+a, k+a+alpha+beta]
//             (-1)^{k+alpha} q^{C(k,2) + C(k+beta,2) + C(k+alpha+beta+1,2)}.
//
// Specialising (alpha, beta) to the nine near-constant monomials and
// evaluating the right side through the closed forms of conj1/conj2 gives
// nine single-sum identities ("perturbed q-Dixon" sums). The table below is
// the frozen identity <-> monomial correspondence:
//
//   id  monomial      (alpha,beta)  lhs sign     closed form
//   1   x/y           ( 1,-1)       (-1)^k       conj1 (r,s) = (1,2)
//   2   x/z           ( 1, 0)       (-1)^k       conj1 (1,3)
//   3   y/x           (-1, 1)       (-1)^k       conj1 (2,1)
//   4   z/x           (-1, 0)       (-1)^k       conj1 (3,1)
//   5   y/z           ( 0, 1)       (-1)^{k+1}   conj1 (2,3)
//   6   z/y           ( 0,-1)       (-1)^{k+1}   conj1 (3,2)
//   7   x^2/(yz)      ( 2,-1)       (-1)^k       conj2 (r,s,t) = (1,2,3)
//   8   y^2/(xz)      (-1, 2)       (-1)^{k+1}   conj2 (2,1,3)
//   9   z^2/(xy)      (-1,-1)       (-1)^{k+1}   conj2 (3,1,2)
//
// (indices 1-based in this table only.)

#include "dyson/qpoly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace dyson {

struct DixonParams {
  int a = 0, b = 0, c = 0;
  int alpha = 0, beta = 0;
};

/// Range of k where all three Gaussian binomials are nonzero; empty if lo > hi.
struct SumWindow {
  long lo, hi;
};

SumWindow dixon_window(const DixonParams& p);

/// The single sum above; equals [x^alpha y^beta z^{-alpha-beta}] F_3.
QPoly dixon_sum(const DixonParams& p);

/// c_a a + c_b b + c_c c + c_0
struct LinearForm {
  int ca = 0, cb = 0, cc = 0, c0 = 0;
  long eval(int a, int b, int c) const { return long{ca} * a + long{cb} * b + long{cc} * c + c0; }
};

struct PerturbedIdentity {
  int id;
  int alpha;
  int beta;
  /// Sum side sign is (-1)^{k + sign_shift}.
  int sign_shift;
  /// Sum side exponent (e2 k^2 + e1 k + e0) / 2.
  int e2, e1, e0;

  // Product side: q-trinomial * q^{qexp} * prod (1-q^{num}) * bracket / prod (1-q^{den}),
  // where bracket is 1, or (1-q^{1+a+b+c}) + q^{m}(1-q^{m_inner}) when m is set.
  LinearForm qexp;
  std::vector<LinearForm> num;
  std::vector<LinearForm> den;
  std::optional<LinearForm> m;
  LinearForm m_inner;

  /// 0-based indices (r,s) or (r,s,t) of the matching conj1/conj2 coefficient.
  std::vector<std::size_t> indices;
};

/// Identities 1..9, in order.
const std::array<PerturbedIdentity, 9>& perturbed_identities();

/// Throws std::out_of_range unless 1 <= id <= 9.
const PerturbedIdentity& perturbed_identity(int id);

QPoly dixon_lhs(int id, int a, int b, int c);
/// NotDivisible if the product side fails to reduce.
QPoly dixon_rhs(int id, int a, int b, int c);

struct IdentityCheck {
  int a, b, c;
  bool equal;
  /// Lowest power of q where the sides differ.
  std::optional<std::size_t> first_diff;
  QPoly lhs, rhs;
};

struct IdentityReport {
  int id;
  int max;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Checks every 0 <= a,b,c <= max.
IdentityReport verify_identity(int id, int max);

} // namespace dyson

#endif // DYSON_QDIXON_HPP
