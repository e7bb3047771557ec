#include "dyson/qproduct.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyson {

namespace {

QPoly product_of(const std::vector<unsigned>& ms) {
  QPoly p = 1;
  for (unsigned m : ms) p *= QPoly::one_minus_q_pow(m);
  return p;
}

} // namespace

void QProductForm::validate() const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("QProductForm: sign must be +1 or -1");
  for (unsigned d : den)
    if (d == 0) throw std::invalid_argument("QProductForm: denominator factor 1 - q^0");
}

QProductForm QProductForm::cancelled() const {
  QProductForm out{sign, qexp, {}, {}};
  std::vector<unsigned> n = num, d = den;
  std::sort(n.begin(), n.end());
  std::sort(d.begin(), d.end());
  std::set_difference(n.begin(), n.end(), d.begin(), d.end(), std::back_inserter(out.num));
  std::set_difference(d.begin(), d.end(), n.begin(), n.end(), std::back_inserter(out.den));
  return out;
}

QPoly QProductForm::to_qpoly(const QPoly& cofactor) const {
  validate();
  const QProductForm c = cancelled();
  QPoly numer = product_of(c.num) * cofactor;
  if (numer.is_zero()) return {};
  QPoly value = div_exact(numer, product_of(c.den)).shifted(c.qexp);
  return sign < 0 ? -value : value;
}

std::string QProductForm::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  out += "q^" + std::to_string(qexp);
  for (unsigned m : num) out += " (1-q^" + std::to_string(m) + ")";
  if (!den.empty()) {
    out += " /";
    for (unsigned d : den) out += " (1-q^" + std::to_string(d) + ")";
  }
  return out;
}

QProductForm operator*(const QProductForm& lhs, const QProductForm& rhs) {
  QProductForm out{lhs.sign * rhs.sign, lhs.qexp + rhs.qexp, lhs.num, lhs.den};
  out.num.insert(out.num.end(), rhs.num.begin(), rhs.num.end());
  out.den.insert(out.den.end(), rhs.den.begin(), rhs.den.end());
  return out;
}

bool equivalent(const QProductForm& lhs, const QProductForm& rhs) {
  lhs.validate();
  rhs.validate();
  QPoly l = product_of(lhs.num) * product_of(rhs.den);
  QPoly r = product_of(rhs.num) * product_of(lhs.den);
  l = l.shifted(lhs.qexp);
  r = r.shifted(rhs.qexp);
  if (lhs.sign < 0) l = -l;
  if (rhs.sign < 0) r = -r;
  return l == r;
}

} // namespace dyson
