#include "dyson/dyson_product.hpp"

#include "dyson/qcombinat.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace dyson {

ExpansionLimits ExpansionLimits::from_env() {
  ExpansionLimits limits;
  if (const char* env = std::getenv("DYSON_TERM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_terms = static_cast<std::size_t>(v);
  }
  return limits;
}

std::vector<BinomialFactor> dyson_factors(const AVec& a) {
  std::vector<BinomialFactor> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[j] > 0) out.push_back({i, j, a[j], true});
      if (a[i] > 0) out.push_back({j, i, a[i], false});
    }
  }
  return out;
}

std::vector<BigInt> classical_row(const BinomialFactor& f) {
  std::vector<BigInt> row(f.power + 1);
  for (int k = 0; k <= f.power; ++k) {
    row[k] = binomial(f.power, k);
    if (k % 2) row[k] = -row[k];
  }
  return row;
}

// (z; q)_m = sum_k [m,k]_q (-1)^k q^{k(k-1)/2} z^k, with z = x_up/x_down or
// z = q x_up/x_down.
std::vector<QPoly> q_row(const BinomialFactor& f) {
  std::vector<QPoly> row(f.power + 1);
  for (int k = 0; k <= f.power; ++k) {
    const unsigned shift = static_cast<unsigned>(f.q_shifted ? k * (k + 1) / 2 : k * (k - 1) / 2);
    row[k] = gauss_binomial(f.power, k).shifted(shift);
    if (k % 2) row[k] = -row[k];
  }
  return row;
}

namespace {

template <class R>
std::vector<R> row_for(const BinomialFactor& f);

template <>
std::vector<BigInt> row_for<BigInt>(const BinomialFactor& f) {
  return classical_row(f);
}

template <>
std::vector<QPoly> row_for<QPoly>(const BinomialFactor& f) {
  return q_row(f);
}

// Per-variable exponent reach of factors [from, end): the remaining factors can
// move x_v's exponent anywhere within [lo[v], hi[v]].
struct Reach {
  std::vector<std::vector<long>> lo;
  std::vector<std::vector<long>> hi;

  Reach(const std::vector<BinomialFactor>& fs, std::size_t n)
      : lo(fs.size() + 1, std::vector<long>(n, 0)), hi(fs.size() + 1, std::vector<long>(n, 0)) {
    for (std::size_t s = fs.size(); s-- > 0;) {
      lo[s] = lo[s + 1];
      hi[s] = hi[s + 1];
      hi[s][fs[s].up] += fs[s].power;
      lo[s][fs[s].down] -= fs[s].power;
    }
  }

  bool feasible(std::size_t from, const ExpVec& e, const ExpVec& target) const {
    for (std::size_t v = 0; v < e.size(); ++v) {
      const long gap = static_cast<long>(target[v]) - e[v];
      if (gap < lo[from][v] || gap > hi[from][v]) return false;
    }
    return true;
  }
};

template <class R>
LaurentPoly<R> expand(const AVec& a, const ExpVec* target, const ExpansionLimits& limits,
                      ExpansionStats* stats) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("Dyson product needs n >= 1");
  const auto factors = dyson_factors(a);
  std::optional<Reach> reach;
  if (target) reach.emplace(factors, n);

  LaurentPoly<R> current = LaurentPoly<R>::one(n);
  std::size_t peak = 1;
  if (target && !reach->feasible(0, ExpVec(n), *target)) current = LaurentPoly<R>(n);

  for (std::size_t s = 0; s < factors.size() && !current.is_zero(); ++s) {
    const BinomialFactor& f = factors[s];
    const std::vector<R> row = row_for<R>(f);
    LaurentPoly<R> next(n);
    for (const auto& [e, c] : current.terms()) {
      for (int k = 0; k <= f.power; ++k) {
        ExpVec moved = e;
        moved[f.up] += k;
        moved[f.down] -= k;
        if (reach && !reach->feasible(s + 1, moved, *target)) continue;
        next.add_term(moved, c * row[k]);
        if (next.size() > limits.max_terms)
          throw ResourceLimitExceeded("expansion exceeded term cap of " +
                                      std::to_string(limits.max_terms));
      }
    }
    current = std::move(next);
    peak = std::max(peak, current.size());
  }
  if (stats) {
    stats->peak_terms = peak;
    stats->final_terms = current.size();
  }
  return current;
}

template <class R>
R coeff_pruned(const AVec& a, const ExpVec& b, const ExpansionLimits& limits, ExpansionStats* stats) {
  if (b.size() != a.size()) throw std::invalid_argument("coefficient index has wrong arity");
  if (b.total() != 0) {
    if (stats) *stats = {};
    return R(0);
  }
  return expand<R>(a, &b, limits, stats).coeff(b);
}

} // namespace

LaurentPoly<BigInt> build_dyson(const AVec& a, const ExpansionLimits& limits, ExpansionStats* stats) {
  return expand<BigInt>(a, nullptr, limits, stats);
}

LaurentPoly<QPoly> build_qdyson(const AVec& a, const ExpansionLimits& limits, ExpansionStats* stats) {
  return expand<QPoly>(a, nullptr, limits, stats);
}

BigInt dyson_coeff_pruned(const AVec& a, const ExpVec& b, const ExpansionLimits& limits,
                          ExpansionStats* stats) {
  return coeff_pruned<BigInt>(a, b, limits, stats);
}

QPoly qdyson_coeff_pruned(const AVec& a, const ExpVec& b, const ExpansionLimits& limits,
                          ExpansionStats* stats) {
  return coeff_pruned<QPoly>(a, b, limits, stats);
}

} // namespace dyson
