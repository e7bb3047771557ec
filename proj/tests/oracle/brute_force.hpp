#ifndef DYSON_TESTS_BRUTE_FORCE_HPP
#define DYSON_TESTS_BRUTE_FORCE_HPP

// Test-only oracle: expands the (q-)Dyson product as a plain product of
// linear factors (1 - q^s x_up/x_down) by enumerating every subset of
// factors. Uses none of the library's polynomial types, binomial rows or
// Laurent maps, so it is independent of the code paths it checks.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Linear {
  std::size_t up, down;
  int qpow;
};

/// Coefficient polynomial as power -> value, zeros removed.
using SmallQPoly = std::map<int, std::int64_t>;
using Expansion = std::map<std::vector<int>, SmallQPoly>;

inline std::vector<Linear> linear_factors(const std::vector<int>& a, bool q_mode) {
  std::vector<Linear> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // (x_i q / x_j; q)_{a_j} = prod_{t<a_j} (1 - q^{t+1} x_i/x_j)
      for (int t = 0; t < a[j]; ++t) out.push_back({i, j, q_mode ? t + 1 : 0});
      // (x_j / x_i; q)_{a_i} = prod_{t<a_i} (1 - q^t x_j/x_i)
      for (int t = 0; t < a[i]; ++t) out.push_back({j, i, q_mode ? t : 0});
    }
  return out;
}

inline Expansion expand(const std::vector<int>& a, bool q_mode) {
  const auto fs = linear_factors(a, q_mode);
  if (fs.size() > 24) throw std::runtime_error("oracle: too many factors");
  Expansion out;
  const std::uint64_t total = std::uint64_t{1} << fs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> e(a.size(), 0);
    int qp = 0;
    int sign = 1;
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (mask >> f & 1) {
        e[fs[f].up] += 1;
        e[fs[f].down] -= 1;
        qp += fs[f].qpow;
        sign = -sign;
      }
    auto& poly = out[e];
    poly[qp] += sign;
    if (poly[qp] == 0) poly.erase(qp);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.empty())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

inline SmallQPoly coeff(const Expansion& ex, const std::vector<int>& b) {
  auto it = ex.find(b);
  return it == ex.end() ? SmallQPoly{} : it->second;
}

inline std::int64_t at_one(const SmallQPoly& p) {
  std::int64_t s = 0;
  for (const auto& [k, v] : p) s += v;
  return s;
}

} // namespace oracle

#endif // DYSON_TESTS_BRUTE_FORCE_HPP
