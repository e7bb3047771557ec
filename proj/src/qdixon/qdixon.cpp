#include "dyson/qdixon.hpp"

#include "dyson/qcombinat.hpp"
#include "dyson/qproduct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyson {

namespace {

long choose2(long m) { return m * (m - 1) / 2; }

unsigned nonneg(long v) {
  if (v < 0) throw std::logic_error("negative exponent " + std::to_string(v));
  return static_cast<unsigned>(v);
}

QPoly trinomial(int a, int b, int c) { return q_multinomial(AVec{a, b, c}); }

// Sum side shared by dixon_sum and the identities: the three binomials at
// shifts (beta, alpha+beta), a sign and a quadratic exponent in k.
template <class Exponent>
QPoly triple_sum(int a, int b, int c, int beta, int alpha_beta, int sign_shift, Exponent exponent) {
  const long lo = std::max({-static_cast<long>(b) - beta, -static_cast<long>(c),
                            -static_cast<long>(a) - alpha_beta});
  const long hi = std::min({static_cast<long>(a) - beta, static_cast<long>(b),
                            static_cast<long>(c) - alpha_beta});
  QPoly sum;
  for (long k = lo; k <= hi; ++k) {
    QPoly term = gauss_binomial(a + b, k + b + beta) * gauss_binomial(b + c, k + c) *
                 gauss_binomial(c + a, k + a + alpha_beta);
    term = term.shifted(nonneg(exponent(k)));
    if ((k + sign_shift) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

const std::array<PerturbedIdentity, 9> kIdentities = {{
    // id alpha beta sign  e2 e1 e0   qexp            num             den
    {1, 1, -1, 0, 3, -3, 2, {0, 0, 1, 1}, {{0, 1, 0, 0}}, {{1, 0, 1, 1}}, std::nullopt, {}, {0, 1}},
    {2, 1, 0, 0, 3, 1, 2, {0, 0, 0, 1}, {{0, 0, 1, 0}}, {{1, 1, 0, 1}}, std::nullopt, {}, {0, 2}},
    {3, -1, 1, 0, 3, 1, 0, {0, 0, 0, 0}, {{1, 0, 0, 0}}, {{0, 1, 1, 1}}, std::nullopt, {}, {1, 0}},
    {4, -1, 0, 0, 3, -3, 0, {0, 1, 0, 0}, {{1, 0, 0, 0}}, {{0, 1, 1, 1}}, std::nullopt, {}, {2, 0}},
    {5, 0, 1, 1, 3, 3, 2, {1, 0, 0, 1}, {{0, 0, 1, 0}}, {{1, 1, 0, 1}}, std::nullopt, {}, {1, 2}},
    {6, 0, -1, 1, 3, -5, 2, {0, 0, 0, 0}, {{0, 1, 0, 0}}, {{1, 0, 1, 1}}, std::nullopt, {}, {2, 1}},
    {7, 2, -1, 0, 3, -1, 4, {0, 0, 0, 2}, {{0, 1, 0, 0}, {0, 0, 1, 0}},
     {{1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, LinearForm{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 2}},
    {8, -1, 2, 1, 3, 5, 4, {0, 0, 0, 1}, {{1, 0, 0, 0}, {0, 0, 1, 0}},
     {{0, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}}, LinearForm{1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 2}},
    {9, -1, -1, 1, 3, -7, 4, {0, 0, 0, 0}, {{1, 0, 0, 0}, {0, 1, 0, 0}},
     {{0, 0, 1, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}}, LinearForm{0, 1, 0, 0}, {0, 0, 1, 1}, {2, 0, 1}},
}};

} // namespace

SumWindow dixon_window(const DixonParams& p) {
  const long ab = p.alpha + p.beta;
  return {std::max({-static_cast<long>(p.b) - p.beta, -static_cast<long>(p.c), -p.a - ab}),
          std::min({static_cast<long>(p.a) - p.beta, static_cast<long>(p.b), p.c - ab})};
}

QPoly dixon_sum(const DixonParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0) throw std::invalid_argument("dixon_sum: a, b, c must be >= 0");
  const long ab = p.alpha + p.beta;
  return triple_sum(p.a, p.b, p.c, p.beta, static_cast<int>(ab), p.alpha, [&](long k) {
    return choose2(k) + choose2(k + p.beta) + choose2(k + ab + 1);
  });
}

const std::array<PerturbedIdentity, 9>& perturbed_identities() { return kIdentities; }

const PerturbedIdentity& perturbed_identity(int id) {
  if (id < 1 || id > 9) throw std::out_of_range("identity id must be in 1..9, got " + std::to_string(id));
  return kIdentities[static_cast<std::size_t>(id - 1)];
}

QPoly dixon_lhs(int id, int a, int b, int c) {
  const PerturbedIdentity& idn = perturbed_identity(id);
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("dixon_lhs: a, b, c must be >= 0");
  return triple_sum(a, b, c, idn.beta, idn.alpha + idn.beta, idn.sign_shift, [&](long k) {
    const long twice = idn.e2 * k * k + idn.e1 * k + idn.e0;
    if (twice % 2 != 0) throw std::logic_error("odd exponent numerator");
    return twice / 2;
  });
}

QPoly dixon_rhs(int id, int a, int b, int c) {
  const PerturbedIdentity& idn = perturbed_identity(id);
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("dixon_rhs: a, b, c must be >= 0");
  QProductForm form{1, nonneg(idn.qexp.eval(a, b, c)), {}, {}};
  for (const auto& f : idn.num) form.num.push_back(nonneg(f.eval(a, b, c)));
  for (const auto& f : idn.den) form.den.push_back(nonneg(f.eval(a, b, c)));
  QPoly cofactor = trinomial(a, b, c);
  if (idn.m) {
    const unsigned total = nonneg(1L + a + b + c);
    cofactor *= QPoly::one_minus_q_pow(total) +
                QPoly::one_minus_q_pow(nonneg(idn.m_inner.eval(a, b, c))).shifted(nonneg(idn.m->eval(a, b, c)));
  }
  return form.to_qpoly(cofactor);
}

bool IdentityReport::all_pass() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.equal; }));
}

IdentityReport verify_identity(int id, int max) {
  perturbed_identity(id);
  if (max < 0) throw std::invalid_argument("verify_identity: max must be >= 0");
  IdentityReport report{id, max, {}};
  for (int a = 0; a <= max; ++a)
    for (int b = 0; b <= max; ++b)
      for (int c = 0; c <= max; ++c) {
        IdentityCheck check{a, b, c, false, std::nullopt, dixon_lhs(id, a, b, c), {}};
        try {
          check.rhs = dixon_rhs(id, a, b, c);
        } catch (const NotDivisible&) {
          check.first_diff = 0;
          report.checks.push_back(std::move(check));
          continue;
        }
        check.equal = check.lhs == check.rhs;
        if (!check.equal) {
          const auto len = std::max(check.lhs.coeffs().size(), check.rhs.coeffs().size());
          for (std::size_t i = 0; i < len; ++i)
            if (check.lhs[i] != check.rhs[i]) {
              check.first_diff = i;
              break;
            }
        }
        report.checks.push_back(std::move(check));
      }
  return report;
}

} // namespace dyson
