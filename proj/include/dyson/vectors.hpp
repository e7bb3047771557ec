#ifndef DYSON_VECTORS_HPP
#define DYSON_VECTORS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dyson {

/// Laurent exponent vector: position i holds the exponent of x_{i+1}.
class ExpVec {
public:
  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n, 0) {}
  ExpVec(std::initializer_list<int> e) : e_(e) {}
  explicit ExpVec(std::vector<int> e) : e_(std::move(e)) {}

  static ExpVec unit(std::size_t n, std::size_t k) {
    ExpVec v(n);
    v.e_[k] = 1;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  int& operator[](std::size_t i) { return e_[i]; }
  int operator[](std::size_t i) const { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  std::span<const int> view() const { return e_; }

  long total() const {
    long s = 0;
    for (int v : e_) s += v;
    return s;
  }

  /// Copy with position k removed.
  ExpVec erased(std::size_t k) const {
    ExpVec v;
    v.e_.reserve(e_.size() - 1);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (i != k) v.e_.push_back(e_[i]);
    return v;
  }

  ExpVec& operator+=(const ExpVec& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  ExpVec& operator-=(const ExpVec& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

  /// "1,0,-1"
  std::string to_string() const;

private:
  std::vector<int> e_;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Dyson parameters a_1..a_n, all nonnegative.
class AVec {
public:
  AVec() = default;
  /// Throws std::invalid_argument on a negative entry.
  AVec(std::initializer_list<int> a);
  explicit AVec(std::vector<int> a);

  std::size_t size() const { return a_.size(); }
  int operator[](std::size_t i) const { return a_[i]; }
  auto begin() const { return a_.begin(); }
  auto end() const { return a_.end(); }
  std::span<const int> view() const { return a_; }

  /// First elementary symmetric polynomial a_1 + ... + a_n.
  long sigma() const;
  /// Sum of a_k for lo <= k <= hi (0-based); zero when lo > hi.
  long range_sum(long lo, long hi) const;

  AVec minus_unit(std::size_t k) const;
  AVec erased(std::size_t k) const;

  friend bool operator==(const AVec&, const AVec&) = default;
  friend auto operator<=>(const AVec&, const AVec&) = default;

  std::string to_string() const;

private:
  std::vector<int> a_;
};

/// Every vector in {0..max}^n, in lexicographic order.
std::vector<AVec> all_avecs(std::size_t n, int max);

} // namespace dyson

#endif // DYSON_VECTORS_HPP
