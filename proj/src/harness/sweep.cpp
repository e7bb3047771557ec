#include "dyson/harness/sweep.hpp"

#include "dyson/closed_form.hpp"
#include "dyson/good_recurrence.hpp"
#include "dyson/harness/report.hpp"
#include "dyson/qdixon.hpp"
#include "dyson/version.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

namespace dyson::harness {

namespace {

using Clock = std::chrono::steady_clock;
using Unit = std::function<std::vector<VerificationCase>()>;

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames = {{
    {Family::dyson, "dyson"},
    {Family::qdyson, "qdyson"},
    {Family::thm1, "thm1"},
    {Family::thm2, "thm2"},
    {Family::thm3, "thm3"},
    {Family::conj1, "conj1"},
    {Family::conj2, "conj2"},
    {Family::conj3, "conj3"},
    {Family::goodrec, "goodrec"},
    {Family::qdixon, "qdixon"},
    {Family::rothe, "rothe"},
}};

std::int64_t micros_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

std::string error_text(const std::exception& e) { return std::string("error: ") + e.what(); }

bool is_error(const std::string& s) { return s.rfind("error:", 0) == 0; }

void settle(VerificationCase& c) { c.equal = c.lhs == c.rhs && !is_error(c.lhs); }

// Map dyson/thm* onto their q-analogues when --q is given.
Family effective(Family f, bool q) {
  if (!q) return f;
  switch (f) {
    case Family::dyson: return Family::qdyson;
    case Family::thm1: return Family::conj1;
    case Family::thm2: return Family::conj2;
    case Family::thm3: return Family::conj3;
    default: return f;
  }
}

CoeffFamily coeff_family(Family f) {
  switch (f) {
    case Family::thm1:
    case Family::conj1: return CoeffFamily::thm1;
    case Family::thm2:
    case Family::conj2: return CoeffFamily::thm2;
    case Family::thm3:
    case Family::conj3: return CoeffFamily::thm3;
    default: return CoeffFamily::constant;
  }
}

int default_amax(Family f) {
  switch (f) {
    case Family::qdixon: return 4;
    case Family::rothe: return 2;
    default: return is_q_family(f) ? 2 : 3;
  }
}

CaseParams params_of(const AVec& a, const std::vector<std::size_t>& idx) {
  CaseParams p;
  p.n = static_cast<int>(a.size());
  p.a.assign(a.begin(), a.end());
  for (std::size_t i : idx) p.indices.push_back(static_cast<int>(i) + 1);
  return p;
}

// Closed form (lhs) against the full expansion (rhs), one unit per a.
std::vector<VerificationCase> closed_unit(Family fam, const AVec& a, const SweepOptions& opts) {
  const bool q = is_q_family(fam);
  const auto specs = all_specs(coeff_family(fam), a.size());
  std::vector<VerificationCase> out;
  for (const auto& spec : specs)
    out.push_back({std::string(family_name(fam)), params_of(a, spec.indices), {}, {}, false, 0});

  const auto t0 = Clock::now();
  std::optional<LaurentPoly<BigInt>> pc;
  std::optional<LaurentPoly<QPoly>> pq;
  std::string expand_error;
  try {
    if (q)
      pq = build_qdyson(a, opts.limits);
    else
      pc = build_dyson(a, opts.limits);
  } catch (const std::exception& e) {
    expand_error = error_text(e);
  }
  const std::int64_t expand_micros = micros_since(t0);

  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& c = out[i];
    const auto t1 = Clock::now();
    try {
      if (q) {
        QPoly v = q_value(specs[i], a);
        if (opts.fault == Fault::l_off_by_one && fam != Family::qdyson) v = v.shifted(1);
        c.lhs = v.to_string();
      } else {
        c.lhs = classical_value(specs[i], a).get_str();
      }
    } catch (const std::exception& e) {
      c.lhs = error_text(e);
    }
    if (!expand_error.empty())
      c.rhs = expand_error;
    else
      c.rhs = q ? pq->coeff(specs[i].target()).to_string() : pc->coeff(specs[i].target()).get_str();
    c.micros = micros_since(t1) + (i == 0 ? expand_micros : 0);
    settle(c);
  }
  return out;
}

// Good's recurrence against the classical expansion at 0 and every
// thm1..thm3 monomial.
std::vector<VerificationCase> goodrec_unit(const AVec& a, const SweepOptions& opts) {
  std::vector<CoeffSpec> specs;
  for (auto f : {CoeffFamily::constant, CoeffFamily::thm1, CoeffFamily::thm2, CoeffFamily::thm3})
    for (auto& s : all_specs(f, a.size())) specs.push_back(std::move(s));

  std::vector<VerificationCase> out;
  const auto t0 = Clock::now();
  std::optional<LaurentPoly<BigInt>> pc;
  std::string expand_error;
  try {
    pc = build_dyson(a, opts.limits);
  } catch (const std::exception& e) {
    expand_error = error_text(e);
  }
  std::int64_t carry = micros_since(t0);
  GoodEvaluator eval;
  for (const auto& spec : specs) {
    VerificationCase c{"goodrec", params_of(a, spec.indices), {}, {}, false, 0};
    const auto t1 = Clock::now();
    const ExpVec b = spec.target();
    try {
      c.lhs = eval.coeff(b, a).get_str();
    } catch (const std::exception& e) {
      c.lhs = error_text(e);
    }
    c.rhs = expand_error.empty() ? pc->coeff(b).get_str() : expand_error;
    c.micros = micros_since(t1) + carry;
    carry = 0;
    settle(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VerificationCase> qdixon_unit(const PerturbedIdentity& idn, int a, int amax) {
  std::vector<VerificationCase> out;
  const std::string fam = "qdixon-id" + std::to_string(idn.id);
  for (int b = 0; b <= amax; ++b)
    for (int c = 0; c <= amax; ++c) {
      VerificationCase vc{fam, {3, {a, b, c}, {}, idn.alpha, idn.beta}, {}, {}, false, 0};
      const auto t0 = Clock::now();
      try {
        vc.lhs = dixon_lhs(idn.id, a, b, c).to_string();
      } catch (const std::exception& e) {
        vc.lhs = error_text(e);
      }
      try {
        vc.rhs = dixon_rhs(idn.id, a, b, c).to_string();
      } catch (const std::exception& e) {
        vc.rhs = error_text(e);
      }
      vc.micros = micros_since(t0);
      settle(vc);
      out.push_back(std::move(vc));
    }
  return out;
}

// The general single sum against the q-expansion, |alpha|, |beta| <= 2.
std::vector<VerificationCase> rothe_unit(const AVec& a, const SweepOptions& opts) {
  std::vector<VerificationCase> out;
  const auto t0 = Clock::now();
  std::optional<LaurentPoly<QPoly>> pq;
  std::string expand_error;
  try {
    pq = build_qdyson(a, opts.limits);
  } catch (const std::exception& e) {
    expand_error = error_text(e);
  }
  std::int64_t carry = micros_since(t0);
  for (int alpha = -2; alpha <= 2; ++alpha)
    for (int beta = -2; beta <= 2; ++beta) {
      VerificationCase vc{"rothe", {3, {a[0], a[1], a[2]}, {}, alpha, beta}, {}, {}, false, 0};
      const auto t1 = Clock::now();
      vc.lhs = dixon_sum({a[0], a[1], a[2], alpha, beta}).to_string();
      vc.rhs = expand_error.empty() ? pq->coeff(ExpVec{alpha, beta, -alpha - beta}).to_string() : expand_error;
      vc.micros = micros_since(t1) + carry;
      carry = 0;
      settle(vc);
      out.push_back(std::move(vc));
    }
  return out;
}

std::vector<Unit> plan(const SweepOptions& opts) {
  std::vector<Unit> units;
  for (Family requested : opts.families) {
    const Family fam = effective(requested, opts.q);
    const int amax = opts.amax.value_or(default_amax(fam));
    switch (fam) {
      case Family::qdixon:
        for (const auto& idn : perturbed_identities())
          for (int a = 0; a <= amax; ++a) units.push_back([&idn, a, amax] { return qdixon_unit(idn, a, amax); });
        break;
      case Family::rothe:
        for (const AVec& a : all_avecs(3, amax)) units.push_back([a, &opts] { return rothe_unit(a, opts); });
        break;
      case Family::goodrec:
        for (int n = 2; n <= opts.nmax; ++n)
          for (const AVec& a : all_avecs(static_cast<std::size_t>(n), amax))
            units.push_back([a, &opts] { return goodrec_unit(a, opts); });
        break;
      default: {
        const int floor = std::max<int>(2, static_cast<int>(min_arity(coeff_family(fam))));
        for (int n = floor; n <= opts.nmax; ++n)
          for (const AVec& a : all_avecs(static_cast<std::size_t>(n), amax))
            units.push_back([fam, a, &opts] { return closed_unit(fam, a, opts); });
      }
    }
  }
  return units;
}

} // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  return std::nullopt;
}

const std::vector<Family>& default_suite() {
  static const std::vector<Family> suite(
      {Family::dyson, Family::qdyson, Family::thm1, Family::thm2, Family::thm3, Family::conj1, Family::conj2,
       Family::conj3, Family::goodrec, Family::qdixon, Family::rothe});
  return suite;
}

bool is_q_family(Family f) {
  switch (f) {
    case Family::qdyson:
    case Family::conj1:
    case Family::conj2:
    case Family::conj3:
    case Family::qdixon:
    case Family::rothe: return true;
    default: return false;
  }
}

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::none;
  if (name == "l-off-by-one") return Fault::l_off_by_one;
  return std::nullopt;
}

void validate(const SweepOptions& opts) {
  if (opts.families.empty()) throw std::invalid_argument("no families to sweep");
  if (opts.nmax < 2) throw std::invalid_argument("nmax must be >= 2");
  if (opts.amax && *opts.amax < 0) throw std::invalid_argument("amax must be >= 0");
  if (opts.jobs == 0) throw std::invalid_argument("jobs must be >= 1");
  if (opts.q && std::find(opts.families.begin(), opts.families.end(), Family::goodrec) != opts.families.end())
    throw std::invalid_argument("goodrec has no q-analogue");
}

std::string describe_grid(const SweepOptions& opts) {
  std::string fams;
  for (Family f : opts.families) fams += (fams.empty() ? "" : ",") + std::string(family_name(f));
  return "families=" + fams + " nmax=" + std::to_string(opts.nmax) +
         " amax=" + (opts.amax ? std::to_string(*opts.amax) : std::string("default")) +
         " q=" + (opts.q ? "true" : "false") +
         (opts.fault == Fault::l_off_by_one ? " fault=l-off-by-one" : "");
}

SweepReport run_sweep(const SweepOptions& opts) {
  validate(opts);
  const auto t0 = Clock::now();
  const auto units = plan(opts);
  std::vector<std::vector<VerificationCase>> slots(units.size());

  const unsigned jobs = std::min<unsigned>(opts.jobs, std::max<std::size_t>(1, units.size()));
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < units.size(); i += jobs) slots[i] = units[i]();
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }

  SweepReport report{kVersion, utc_timestamp(), describe_grid(opts), {}, {}, 0};
  for (auto& slot : slots)
    for (auto& c : slot) {
      (c.equal ? report.counts.pass : report.counts.fail) += 1;
      report.cases.push_back(std::move(c));
    }
  report.total_micros = micros_since(t0);
  return report;
}

} // namespace dyson::harness
