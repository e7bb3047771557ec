#include "dyson/good_recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyson {

namespace {

void enumerate_compositions(const ExpVec& b, const AVec& a, std::size_t k,
                            std::vector<std::size_t>& others, std::size_t pos, int remaining,
                            BigInt& weight, ExpVec& child, std::vector<BoundaryTerm>& out) {
  if (pos == others.size()) {
    if (remaining == 0) out.push_back({weight, child});
    return;
  }
  const std::size_t i = others[pos];
  const std::size_t ci = i < k ? i : i - 1;
  const int cap = std::min(remaining, a[i]);
  for (int m = 0; m <= cap; ++m) {
    BigInt saved = weight;
    weight *= binomial(a[i], m);
    child[ci] = b[i] + m;
    enumerate_compositions(b, a, k, others, pos + 1, remaining - m, weight, child, out);
    weight = saved;
  }
  child[ci] = b[i];
}

ExpVec memo_key(const ExpVec& b, const AVec& a) {
  std::vector<int> key(b.begin(), b.end());
  key.insert(key.end(), a.begin(), a.end());
  return ExpVec(std::move(key));
}

} // namespace

std::vector<BoundaryTerm> boundary_expand(std::size_t k, const ExpVec& b, const AVec& a) {
  if (b.size() != a.size() || k >= a.size())
    throw std::invalid_argument("boundary_expand: bad arity or index");
  if (a[k] != 0) throw std::invalid_argument("boundary_expand: a_k must be zero");
  std::vector<BoundaryTerm> out;
  const int bk = b[k];
  if (bk < 0) return out;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != k) others.push_back(i);
  BigInt weight = (bk % 2) ? -1 : 1;
  ExpVec child = b.erased(k);
  enumerate_compositions(b, a, k, others, 0, bk, weight, child, out);
  return out;
}

BigInt GoodEvaluator::coeff(const ExpVec& b, const AVec& a) {
  if (b.size() != a.size()) throw std::invalid_argument("good_coeff: arity mismatch");
  ++calls_;
  if (b.total() != 0) return 0;
  const std::size_t n = a.size();
  if (n == 1) return b[0] == 0 ? 1 : 0;

  ExpVec key;
  if (memoize_) {
    key = memo_key(b, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  BigInt value = 0;
  auto zero = std::find(a.begin(), a.end(), 0);
  if (zero == a.end()) {
    for (std::size_t k = 0; k < n; ++k) value += coeff(b, a.minus_unit(k));
  } else {
    const auto k = static_cast<std::size_t>(zero - a.begin());
    const AVec child_a = a.erased(k);
    for (const auto& term : boundary_expand(k, b, a)) value += term.coeff * coeff(term.child, child_a);
  }

  if (memoize_) memo_.emplace(std::move(key), value);
  return value;
}

BigInt good_coeff(const ExpVec& b, const AVec& a) {
  GoodEvaluator eval;
  return eval.coeff(b, a);
}

} // namespace dyson
