#ifndef DYSON_QCOMBINAT_HPP
#define DYSON_QCOMBINAT_HPP

#include "dyson/bigint.hpp"
#include "dyson/qpoly.hpp"
#include "dyson/vectors.hpp"

namespace dyson {

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
QPoly q_pochhammer(unsigned n);

/// Gaussian binomial [A choose B]_q, zero unless 0 <= B <= A.
/// Built by the q-Pascal rule [A,B] = [A-1,B-1] + q^B [A-1,B] from a
/// per-thread memo table.
QPoly gauss_binomial(long A, long B);

/// (q;q)_{sigma(a)} / prod (q;q)_{a_i}, evaluated as a product of Gaussian
/// binomials so no division happens.
QPoly q_multinomial(const AVec& a);

/// sigma(a)! / prod a_i!.
BigInt multinomial(const AVec& a);

} // namespace dyson

#endif // DYSON_QCOMBINAT_HPP
