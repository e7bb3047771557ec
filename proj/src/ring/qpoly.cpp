#include "dyson/qpoly.hpp"

#include "dyson/simd/kernels.hpp"

#include <algorithm>
#include <limits>

namespace dyson {

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const BigInt& c, unsigned k) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.resize(k + 1);
  p.coeffs_[k] = c;
  return p;
}

QPoly QPoly::one_minus_q_pow(unsigned m) {
  if (m == 0) return {};
  QPoly p;
  p.coeffs_.resize(m + 1);
  p.coeffs_[0] = 1;
  p.coeffs_[m] = -1;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt QPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  QPoly p;
  p.coeffs_.reserve(coeffs_.size() + k);
  p.coeffs_.resize(k);
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly mul_reference(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return QPoly(std::move(out));
}

namespace {

// Largest |c| if every coefficient is int32-ranged, otherwise nullopt.
std::optional<std::int64_t> small_magnitude(const std::vector<BigInt>& coeffs) {
  std::int64_t m = 0;
  for (const auto& c : coeffs) {
    if (!fits_int32(c)) return std::nullopt;
    m = std::max<std::int64_t>(m, std::abs(c.get_si()));
  }
  return m;
}

std::vector<std::int64_t> widen(const std::vector<BigInt>& coeffs) {
  std::vector<std::int64_t> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i].get_si();
  return out;
}

} // namespace

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  auto ma = small_magnitude(a);
  auto mb = small_magnitude(b);
  if (ma && mb) {
    // Each output is a sum of at most min(len) products, each at most ma*mb.
    const __int128 bound = static_cast<__int128>(*ma) * *mb *
                           static_cast<__int128>(std::min(a.size(), b.size()));
    if (bound <= std::numeric_limits<std::int64_t>::max()) {
      auto wa = widen(a);
      auto wb = widen(b);
      std::vector<std::int64_t> acc(a.size() + b.size() - 1, 0);
      simd::active_kernels().convolve_acc(wa, wb, acc);
      std::vector<BigInt> out;
      out.reserve(acc.size());
      for (std::int64_t v : acc) out.emplace_back(static_cast<long>(v));
      return QPoly(std::move(out));
    }
  }
  return mul_reference(lhs, rhs);
}

QPoly div_exact(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("div_exact: division by zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree())
    throw NotDivisible("div_exact: " + p.to_string() + " is not divisible by " + d.to_string());
  std::vector<BigInt> rem = p.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  const BigInt& lead = dc.back();
  std::vector<BigInt> quot(rem.size() - dd);
  BigInt r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) break;
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), dc[j].get_mpz_t());
  }
  if (r != 0 || std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw NotDivisible("div_exact: " + p.to_string() + " is not divisible by " + d.to_string());
  return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

} // namespace dyson
