#include "dyson/qcombinat.hpp"

#include <vector>

namespace dyson {

QPoly q_pochhammer(unsigned n) {
  QPoly p = 1;
  for (unsigned i = 1; i <= n; ++i) p *= QPoly::one_minus_q_pow(i);
  return p;
}

namespace {

// Rows of the q-Pascal triangle, grown on demand. One table per thread, so no
// locking; entries never change once written.
struct PascalTable {
  std::vector<std::vector<QPoly>> rows;

  const QPoly& at(long A, long B) {
    while (static_cast<long>(rows.size()) <= A) {
      const long n = static_cast<long>(rows.size());
      std::vector<QPoly> row(n + 1);
      row[0] = 1;
      row[n] = 1;
      for (long k = 1; k < n; ++k)
        row[k] = rows[n - 1][k - 1] + rows[n - 1][k].shifted(static_cast<unsigned>(k));
      rows.push_back(std::move(row));
    }
    return rows[A][B];
  }
};

thread_local PascalTable pascal;

} // namespace

QPoly gauss_binomial(long A, long B) {
  if (A < 0 || B < 0 || B > A) return {};
  return pascal.at(A, B);
}

QPoly q_multinomial(const AVec& a) {
  QPoly p = 1;
  long partial = 0;
  for (int ai : a) {
    partial += ai;
    if (ai != 0) p *= gauss_binomial(partial, ai);
  }
  return p;
}

BigInt multinomial(const AVec& a) {
  BigInt r = 1;
  long partial = 0;
  for (int ai : a) {
    partial += ai;
    r *= binomial(partial, ai);
  }
  return r;
}

} // namespace dyson
