// Acceptance gate: one PASS/FAIL line per criterion. Every check is exact
// equality; each criterion also has a wall-clock limit.
//
//   acceptance <path-to-dyson-cli>

#include "dyson/closed_form.hpp"
#include "dyson/dyson_product.hpp"
#include "dyson/good_recurrence.hpp"
#include "dyson/harness/report.hpp"
#include "dyson/harness/sweep.hpp"
#include "dyson/qcombinat.hpp"
#include "dyson/qdixon.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sys/wait.h>

using namespace dyson;

namespace {

struct Tally {
  std::size_t total = 0, bad = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++total;
    if (!ok && bad++ == 0) first = what();
  }
};

const std::vector<CoeffFamily> kAllCoeff = {CoeffFamily::constant, CoeffFamily::thm1, CoeffFamily::thm2,
                                            CoeffFamily::thm3};

std::string where(const AVec& a, const ExpVec& b) { return "a=" + a.to_string() + " b=" + b.to_string(); }

std::vector<AVec> grid(std::initializer_list<std::pair<std::size_t, int>> arities) {
  std::vector<AVec> out;
  for (auto [n, m] : arities)
    for (auto& a : all_avecs(n, m)) out.push_back(std::move(a));
  return out;
}

// Criterion-1 grid.
std::vector<AVec> classical_grid() { return grid({{2, 3}, {3, 3}, {4, 3}}); }

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Tally c1() {
  Tally t;
  for (const AVec& a : classical_grid()) {
    const ExpVec zero(a.size());
    t.check(build_dyson(a).coeff(zero) == multinomial(a), [&] { return where(a, zero); });
  }
  return t;
}

Tally c2() {
  Tally t;
  for (const AVec& a : grid({{2, 4}, {3, 4}, {4, 2}})) {
    const ExpVec zero(a.size());
    t.check(build_qdyson(a).coeff(zero) == q_multinomial(a), [&] { return where(a, zero); });
  }
  return t;
}

Tally c3() {
  Tally t;
  for (const AVec& a : classical_grid()) {
    const std::size_t n = a.size();
    const auto full = build_dyson(a);
    for (auto f : {CoeffFamily::thm1, CoeffFamily::thm2, CoeffFamily::thm3})
      for (const auto& spec : all_specs(f, n)) {
        const ExpVec b = spec.target();
        t.check(classical_value(spec, a) == full.coeff(b), [&] { return where(a, b); });
      }
    // [x_r/x_s] is the same for every r != s.
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t r0 = s == 0 ? 1 : 0;
      const BigInt ref = full.coeff(CoeffSpec{CoeffFamily::thm1, {r0, s}, n}.target());
      for (std::size_t r = 0; r < n; ++r)
        if (r != s) {
          const ExpVec b = CoeffSpec{CoeffFamily::thm1, {r, s}, n}.target();
          t.check(full.coeff(b) == ref, [&] { return "r-dependence " + where(a, b); });
        }
    }
    // thm2 at lowered (s,t) against thm3 at lowered (t,u) = (s,t).
    for (const auto& sp3 : all_specs(CoeffFamily::thm3, n)) {
      const auto& i = sp3.indices;
      const CoeffSpec sp2{CoeffFamily::thm2, {i[0], i[2], i[3]}, n};
      t.check(thm2_rational(a, i[0], i[2], i[3]) == thm3_rational(a, i[0], i[1], i[2], i[3]) &&
                  full.coeff(sp2.target()) == full.coeff(sp3.target()),
              [&] { return "thm2/thm3 " + where(a, sp3.target()); });
    }
  }
  return t;
}

Tally c4() {
  Tally t;
  GoodEvaluator eval;
  for (const AVec& a : classical_grid()) {
    const auto full = build_dyson(a);
    for (auto f : kAllCoeff)
      for (const auto& spec : all_specs(f, a.size())) {
        const ExpVec b = spec.target();
        t.check(eval.coeff(b, a) == full.coeff(b), [&] { return where(a, b); });
      }
  }
  const auto g = classical_grid();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int> entry(-2, 2);
  int drawn = 0;
  while (drawn < 50) {
    const AVec& a = g[pick(rng)];
    ExpVec b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = entry(rng);
    if (b.total() != 0) continue;
    ++drawn;
    t.check(good_coeff(b, a) == dyson_coeff_pruned(a, b), [&] { return "random " + where(a, b); });
  }
  return t;
}

Tally c5() {
  Tally t;
  for (const AVec& a : grid({{2, 3}, {3, 3}, {4, 2}})) {
    const auto full = build_qdyson(a);
    for (auto f : {CoeffFamily::thm1, CoeffFamily::thm2, CoeffFamily::thm3})
      for (const auto& spec : all_specs(f, a.size())) {
        const ExpVec b = spec.target();
        const auto& i = spec.indices;
        bool ok = true;
        try {
          ok = q_value(spec, a) == full.coeff(b);
        } catch (const std::exception&) {
          ok = false;
        }
        if (f == CoeffFamily::thm1) {
          ok = ok && L_rs(a, i[0], i[1]) >= 0;
        } else {
          const LMValue lm = f == CoeffFamily::thm2 ? LM_rst(a, i[0], i[1], i[2]) : LM_rstu(a, i[0], i[1], i[2], i[3]);
          ok = ok && lm.L >= 0 && lm.M && *lm.M >= 0;
        }
        t.check(ok, [&] { return where(a, b); });
      }
  }
  return t;
}

Tally c6() {
  Tally t;
  for (int id = 1; id <= 9; ++id) {
    const auto report = verify_identity(id, 5);
    t.check(report.checks.size() >= 216, [&] { return "identity " + std::to_string(id) + " grid too small"; });
    for (const auto& c : report.checks)
      t.check(c.equal, [&] {
        return "identity " + std::to_string(id) + " at " + std::to_string(c.a) + "," + std::to_string(c.b) +
               "," + std::to_string(c.c);
      });
  }
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        t.check(dixon_sum({a, b, c, 0, 0}) == q_multinomial(AVec{a, b, c}), [&] {
          return "constant term " + AVec{a, b, c}.to_string();
        });
  for (const AVec& a : all_avecs(3, 2)) {
    const auto full = build_qdyson(a);
    for (int alpha = -2; alpha <= 2; ++alpha)
      for (int beta = -2; beta <= 2; ++beta) {
        const ExpVec b{alpha, beta, -alpha - beta};
        t.check(dixon_sum({a[0], a[1], a[2], alpha, beta}) == full.coeff(b), [&] { return where(a, b); });
      }
  }
  return t;
}

Tally c7() {
  Tally t;
  // q = 1 of every q-coefficient on the criterion-5 grid, and every monomial of
  // the q-expansion, against the classical side.
  for (const AVec& a : grid({{2, 3}, {3, 3}, {4, 2}})) {
    const auto fq = build_qdyson(a);
    const auto fc = build_dyson(a);
    for (auto f : kAllCoeff)
      for (const auto& spec : all_specs(f, a.size())) {
        const ExpVec b = spec.target();
        t.check(q_value(spec, a).eval_at_one() == classical_value(spec, a), [&] { return where(a, b); });
      }
    for (const auto& [b, c] : fq.terms()) t.check(c.eval_at_one() == fc.coeff(b), [&] { return where(a, b); });
    t.check(fq.size() >= fc.size(), [&] { return "support " + a.to_string(); });
  }
  // Pruned against full, both engines, at every closed-form monomial.
  for (const AVec& a : grid({{2, 3}, {3, 3}, {4, 2}})) {
    const auto fq = build_qdyson(a);
    const auto fc = build_dyson(a);
    for (auto f : kAllCoeff)
      for (const auto& spec : all_specs(f, a.size())) {
        const ExpVec b = spec.target();
        t.check(dyson_coeff_pruned(a, b) == fc.coeff(b) && qdyson_coeff_pruned(a, b) == fq.coeff(b),
                [&] { return "pruned " + where(a, b); });
      }
  }
  return t;
}

Tally c8(const std::string& cli) {
  Tally t;
  namespace h = harness;
  h::SweepOptions opts;
  opts.families = h::default_suite();
  const auto report = h::run_sweep(opts);
  t.check(report.all_pass(), [&] { return "default suite has " + std::to_string(report.counts.fail) + " failures"; });
  const auto doc = nlohmann::json::parse(h::emit(report));
  const auto errs = h::schema_errors(doc);
  t.check(errs.empty(), [&] { return "schema: " + errs.front(); });
  t.check(h::parse_report(h::emit(report)) == report, [] { return std::string("report does not round trip"); });

  opts.fault = h::Fault::l_off_by_one;
  const auto faulty = h::run_sweep(opts);
  t.check(faulty.counts.fail > 0, [] { return std::string("corrupted L went unnoticed"); });

  if (cli.empty()) {
    t.check(false, [] { return std::string("no CLI path given"); });
    return t;
  }
  const std::string tmp = "acceptance_default.json";
  t.check(run_cli(cli, "verify --report " + tmp) == 0, [] { return std::string("verify default suite != 0"); });
  std::ifstream in(tmp);
  t.check(in && h::schema_errors(nlohmann::json::parse(in)).empty(),
          [] { return std::string("CLI report fails the schema"); });
  std::remove(tmp.c_str());
  const std::vector<std::pair<std::string, int>> codes = {
      {"verify --family conj1,conj2,conj3 --nmax 4 --amax 1 --inject-fault l-off-by-one --report /dev/null", 1},
      {"verify --family thm1 --nmax 3 --amax 2 --report /dev/null", 0},
      {"verify --family nosuch", 2},
      {"qdixon --id 10", 2},
      {"coeff --n 2 --a 1,1 --b 1,-1 --q --engine goodrec", 2},
      {"closed --family thm2 --n 3 --a 1,1,1 --indices 1,2", 2},
  };
  for (const auto& [args, want] : codes)
    t.check(run_cli(cli, args) == want, [&] { return "'" + args + "' should exit " + std::to_string(want); });
  return t;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Tally()> run;
};

} // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "Dyson constant term equals the multinomial", 120, c1},
      {2, "q-Dyson constant term equals the q-multinomial", 300, c2},
      {3, "thm1-3 closed forms, r-independence, thm2/thm3 coincidence", 300, c3},
      {4, "Good's recurrence against the expansion", 300, c4},
      {5, "conj1-3 closed forms, exact division, L,M >= 0", 900, c5},
      {6, "q-Dixon identities and single sums", 600, c6},
      {7, "q = 1 specialisation and pruned/full agreement", 600, c7},
      {8, "verify suite, exit codes, JSON schema, negative control", 600, [&cli] { return c8(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::string crash;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = crash.empty() && t.bad == 0 && t.total > 0 && secs <= c.limit_seconds;
    failed += pass ? 0 : 1;
    std::printf("criterion %d %s: %s  [%zu/%zu exact, %.2fs of %.0fs]", c.id, pass ? "PASS" : "FAIL", c.name,
                t.total - t.bad, t.total, secs, c.limit_seconds);
    if (!crash.empty()) std::printf("  exception: %s", crash.c_str());
    if (t.bad) std::printf("  first failure: %s", t.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
