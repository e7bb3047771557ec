#include "dyson/vectors.hpp"

#include <stdexcept>

namespace dyson {

namespace {

std::string join(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void check_nonnegative(const std::vector<int>& a) {
  for (int v : a)
    if (v < 0) throw std::invalid_argument("AVec entries must be nonnegative");
}

} // namespace

std::string ExpVec::to_string() const { return join(e_); }

AVec::AVec(std::initializer_list<int> a) : a_(a) { check_nonnegative(a_); }

AVec::AVec(std::vector<int> a) : a_(std::move(a)) { check_nonnegative(a_); }

long AVec::sigma() const {
  long s = 0;
  for (int v : a_) s += v;
  return s;
}

long AVec::range_sum(long lo, long hi) const {
  long s = 0;
  for (long k = std::max(lo, 0L); k <= hi && k < static_cast<long>(a_.size()); ++k) s += a_[k];
  return s;
}

AVec AVec::minus_unit(std::size_t k) const {
  std::vector<int> v = a_;
  v[k] -= 1;
  return AVec(std::move(v));
}

AVec AVec::erased(std::size_t k) const {
  std::vector<int> v;
  v.reserve(a_.size() - 1);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (i != k) v.push_back(a_[i]);
  return AVec(std::move(v));
}

std::string AVec::to_string() const { return join(a_); }

std::vector<AVec> all_avecs(std::size_t n, int max) {
  std::vector<AVec> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < max) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

} // namespace dyson
