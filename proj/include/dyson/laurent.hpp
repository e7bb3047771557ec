#ifndef DYSON_LAURENT_HPP
#define DYSON_LAURENT_HPP

#include "dyson/bigint.hpp"
#include "dyson/qpoly.hpp"
#include "dyson/vectors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dyson {

template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static bool is_zero(const BigInt& v) { return v == 0; }
  static std::string to_string(const BigInt& v) { return v.get_str(); }
};

template <>
struct RingTraits<QPoly> {
  static bool is_zero(const QPoly& v) { return v.is_zero(); }
  static std::string to_string(const QPoly& v) { return v.to_string(); }
};

/// Sparse Laurent polynomial in x_1..x_n with coefficients in R.
/// Zero coefficients are never stored.
template <class R>
class LaurentPoly {
public:
  using Map = std::unordered_map<ExpVec, R, ExpVecHash>;

  explicit LaurentPoly(std::size_t arity) : arity_(arity) {}

  static LaurentPoly one(std::size_t arity) {
    LaurentPoly p(arity);
    p.terms_.emplace(ExpVec(arity), R(1));
    return p;
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  void add_term(const ExpVec& e, const R& c) {
    check_arity(e.size());
    if (RingTraits<R>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// [x^b] of this polynomial; zero if absent.
  R coeff(const ExpVec& b) const {
    check_arity(b.size());
    auto it = terms_.find(b);
    return it == terms_.end() ? R(0) : it->second;
  }

  std::vector<std::pair<ExpVec, R>> sorted_terms() const {
    std::vector<std::pair<ExpVec, R>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  /// One "e_1,...,e_n: coeff" line per term, exponent vectors ascending.
  std::string to_text() const {
    std::string out;
    for (const auto& [e, c] : sorted_terms())
      out += e.to_string() + ": " + RingTraits<R>::to_string(c) + "\n";
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
    if (p.arity_ != r.arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly out(p.arity_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [er, cr] : r.terms_) out.add_term(ep + er, cp * cr);
    return out;
  }

  friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
    return l.arity_ == r.arity_ && l.terms_ == r.terms_;
  }

private:
  void check_arity(std::size_t n) const {
    if (n != arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  }

  std::size_t arity_;
  Map terms_;
};

} // namespace dyson

#endif // DYSON_LAURENT_HPP
