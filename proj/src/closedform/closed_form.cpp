#include "dyson/closed_form.hpp"

#include "dyson/qcombinat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyson {

std::string_view family_name(CoeffFamily f) {
  switch (f) {
    case CoeffFamily::constant: return "constant";
    case CoeffFamily::thm1: return "thm1";
    case CoeffFamily::thm2: return "thm2";
    case CoeffFamily::thm3: return "thm3";
  }
  return "?";
}

std::size_t index_count(CoeffFamily f) {
  switch (f) {
    case CoeffFamily::constant: return 0;
    case CoeffFamily::thm1: return 2;
    case CoeffFamily::thm2: return 3;
    case CoeffFamily::thm3: return 4;
  }
  return 0;
}

std::size_t min_arity(CoeffFamily f) { return std::max<std::size_t>(1, index_count(f)); }

namespace {

void check_indices(std::size_t n, std::initializer_list<std::size_t> idx, std::size_t floor) {
  if (n < floor)
    throw std::invalid_argument("arity " + std::to_string(n) + " is below the minimum " +
                                std::to_string(floor));
  std::vector<std::size_t> v(idx);
  for (std::size_t i : v)
    if (i >= n) throw std::invalid_argument("index out of range");
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("indices must be distinct");
}

BigRational sigma_plus_one(const AVec& a) { return BigRational(a.sigma() + 1); }

// a_s a_t ((1+sigma) + (1+sigma-a_s-a_t)) / ((1+sigma-a_s-a_t)(1+sigma-a_s)(1+sigma-a_t))
BigRational two_down_factor(const AVec& a, std::size_t s, std::size_t t) {
  const BigRational S = sigma_plus_one(a);
  const BigRational as = a[s], at = a[t];
  BigRational r = as * at * (S + (S - as - at)) / ((S - as - at) * (S - as) * (S - at));
  r.canonicalize();
  return r;
}

unsigned as_exponent(long v) {
  if (v < 0) throw std::logic_error("negative q exponent " + std::to_string(v));
  return static_cast<unsigned>(v);
}

// q^L (1-q^{a_s})(1-q^{a_t}) ((1-q^{1+sigma}) + q^M (1-q^{1+sigma-a_s-a_t}))
//   / ((1-q^{1+sigma-a_s-a_t})(1-q^{1+sigma-a_s})(1-q^{1+sigma-a_t})) * q-multinomial
QPoly two_down_q(const AVec& a, std::size_t s, std::size_t t, const LMValue& lm) {
  const long S = a.sigma() + 1;
  const unsigned inner = as_exponent(S - a[s] - a[t]);
  QPoly bracket = QPoly::one_minus_q_pow(as_exponent(S)) +
                  QPoly::one_minus_q_pow(inner).shifted(as_exponent(*lm.M));
  QProductForm form{1, as_exponent(lm.L),
                    {static_cast<unsigned>(a[s]), static_cast<unsigned>(a[t])},
                    {inner, as_exponent(S - a[s]), as_exponent(S - a[t])}};
  return form.to_qpoly(q_multinomial(a) * bracket);
}

} // namespace

void CoeffSpec::validate() const {
  if (indices.size() != index_count(family))
    throw std::invalid_argument(std::string(family_name(family)) + " takes " +
                                std::to_string(index_count(family)) + " indices");
  if (n < min_arity(family))
    throw std::invalid_argument(std::string(family_name(family)) + " needs n >= " +
                                std::to_string(min_arity(family)));
  std::vector<std::size_t> v = indices;
  for (std::size_t i : v)
    if (i >= n) throw std::invalid_argument("index out of range");
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("indices must be distinct");
}

ExpVec CoeffSpec::target() const {
  ExpVec b(n);
  switch (family) {
    case CoeffFamily::constant:
      break;
    case CoeffFamily::thm1:
      b[indices[0]] += 1;
      b[indices[1]] -= 1;
      break;
    case CoeffFamily::thm2:
      b[indices[0]] += 2;
      b[indices[1]] -= 1;
      b[indices[2]] -= 1;
      break;
    case CoeffFamily::thm3:
      b[indices[0]] += 1;
      b[indices[1]] += 1;
      b[indices[2]] -= 1;
      b[indices[3]] -= 1;
      break;
  }
  return b;
}

std::vector<CoeffSpec> all_specs(CoeffFamily f, std::size_t n) {
  std::vector<CoeffSpec> out;
  if (n < min_arity(f)) return out;
  switch (f) {
    case CoeffFamily::constant:
      out.push_back({f, {}, n});
      break;
    case CoeffFamily::thm1:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (r != s) out.push_back({f, {r, s}, n});
      break;
    case CoeffFamily::thm2:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = s + 1; t < n; ++t)
            if (r != s && r != t) out.push_back({f, {r, s, t}, n});
      break;
    case CoeffFamily::thm3:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t)
            for (std::size_t u = t + 1; u < n; ++u)
              if (t != r && t != s && u != r && u != s) out.push_back({f, {r, s, t, u}, n});
      break;
  }
  return out;
}

BigInt dyson_constant(const AVec& a) { return multinomial(a); }

QPoly qdyson_constant(const AVec& a) { return q_multinomial(a); }

BigRational thm1_rational(const AVec& a, std::size_t r, std::size_t s) {
  check_indices(a.size(), {r, s}, 2);
  BigRational v = -BigRational(a[s]) / (sigma_plus_one(a) - a[s]) * BigRational(multinomial(a));
  v.canonicalize();
  return v;
}

BigRational thm2_rational(const AVec& a, std::size_t r, std::size_t s, std::size_t t) {
  check_indices(a.size(), {r, s, t}, 3);
  BigRational v = two_down_factor(a, s, t) * BigRational(multinomial(a));
  v.canonicalize();
  return v;
}

BigRational thm3_rational(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
  check_indices(a.size(), {r, s, t, u}, 4);
  BigRational v = two_down_factor(a, t, u) * BigRational(multinomial(a));
  v.canonicalize();
  return v;
}

BigInt thm1_value(const AVec& a, std::size_t r, std::size_t s) {
  return to_integer(thm1_rational(a, r, s));
}

BigInt thm2_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t) {
  return to_integer(thm2_rational(a, r, s, t));
}

BigInt thm3_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
  return to_integer(thm3_rational(a, r, s, t, u));
}

long L_rs(const AVec& a, std::size_t r, std::size_t s) {
  check_indices(a.size(), {r, s}, 2);
  const long R = static_cast<long>(r), S = static_cast<long>(s);
  if (r < s) return 1 + a.sigma() - a.range_sum(R, S);
  return a.range_sum(S + 1, R - 1);
}

LMValue LM_rst(const AVec& a, std::size_t r, std::size_t s, std::size_t t) {
  check_indices(a.size(), {r, s, t}, 3);
  if (s > t) std::swap(s, t);
  const long R = static_cast<long>(r), S = static_cast<long>(s), T = static_cast<long>(t);
  const long sig = a.sigma();
  if (r < s)
    return {2 + 2 * sig - 2 * a.range_sum(R, T) + a.range_sum(S + 1, T - 1), a[t]};
  if (r < t)
    return {1 + sig - a.range_sum(S, T) + 2 * a.range_sum(S + 1, R - 1), a[s]};
  return {2 * a.range_sum(T + 1, R - 1) + a.range_sum(S + 1, T - 1), a[t]};
}

LMValue LM_rstu(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
  check_indices(a.size(), {r, s, t, u}, 4);
  if (r > s) std::swap(r, s);
  if (t > u) std::swap(t, u);
  const long R = static_cast<long>(r), S = static_cast<long>(s);
  const long T = static_cast<long>(t), U = static_cast<long>(u);
  const long sig = a.sigma();
  auto sum = [&a](long lo, long hi) { return a.range_sum(lo, hi); };
  if (r < t) {
    if (s < t)  // r < s < t < u
      return {2 + 2 * sig - 2 * sum(R, U) + sum(R, S - 1) + sum(T + 1, U - 1), a[u]};
    if (s < u)  // r < t < s < u
      return {1 + sig - sum(R, U) + sum(T + 1, S - 1), 1 + sig};
    // r < t < u < s
    return {1 + sig - sum(R, S - 1) + 2 * sum(T + 1, R - 1) + sum(T + 1, U - 1) + 2 * sum(U + 1, S - 1),
            a[u]};
  }
  if (r < u) {
    if (s < u)  // t < r < s < u
      return {1 + sig - sum(T, U) + sum(R, S - 1) + 2 * sum(T + 1, R - 1), a[t]};
    // t < r < u < s
    return {sum(T + 1, R - 1) + sum(U + 1, S - 1), 1 + sig};
  }
  // t < u < r < s
  return {sum(R, S - 1) + sum(T + 1, U - 1) + 2 * sum(U + 1, R - 1), a[u]};
}

QProductForm conj1_form(const AVec& a, std::size_t r, std::size_t s) {
  const long L = L_rs(a, r, s);
  return {-1, as_exponent(L), {static_cast<unsigned>(a[s])}, {as_exponent(a.sigma() + 1 - a[s])}};
}

QPoly conj1_value(const AVec& a, std::size_t r, std::size_t s) {
  return conj1_form(a, r, s).to_qpoly(q_multinomial(a));
}

QPoly conj2_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t) {
  const LMValue lm = LM_rst(a, r, s, t);
  return two_down_q(a, s, t, lm);
}

QPoly conj3_value(const AVec& a, std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
  const LMValue lm = LM_rstu(a, r, s, t, u);
  return two_down_q(a, t, u, lm);
}

BigInt classical_value(const CoeffSpec& spec, const AVec& a) {
  spec.validate();
  if (a.size() != spec.n) throw std::invalid_argument("a has the wrong length");
  const auto& i = spec.indices;
  switch (spec.family) {
    case CoeffFamily::constant: return dyson_constant(a);
    case CoeffFamily::thm1: return thm1_value(a, i[0], i[1]);
    case CoeffFamily::thm2: return thm2_value(a, i[0], i[1], i[2]);
    case CoeffFamily::thm3: return thm3_value(a, i[0], i[1], i[2], i[3]);
  }
  return 0;
}

QPoly q_value(const CoeffSpec& spec, const AVec& a) {
  spec.validate();
  if (a.size() != spec.n) throw std::invalid_argument("a has the wrong length");
  const auto& i = spec.indices;
  switch (spec.family) {
    case CoeffFamily::constant: return qdyson_constant(a);
    case CoeffFamily::thm1: return conj1_value(a, i[0], i[1]);
    case CoeffFamily::thm2: return conj2_value(a, i[0], i[1], i[2]);
    case CoeffFamily::thm3: return conj3_value(a, i[0], i[1], i[2], i[3]);
  }
  return {};
}

} // namespace dyson
