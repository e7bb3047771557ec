// Command-line front end: coeff, closed, verify, qdixon, bench.
// Exit codes: 0 verified / printed, 1 an inequality or failed instance, 2 usage.

#include "dyson/closed_form.hpp"
#include "dyson/dyson_product.hpp"
#include "dyson/good_recurrence.hpp"
#include "dyson/harness/report.hpp"
#include "dyson/harness/sweep.hpp"
#include "dyson/qdixon.hpp"
#include "dyson/simd/kernels.hpp"
#include "dyson/version.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace dyson;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AVec make_avec(const std::vector<int>& a, int n) {
  if (static_cast<int>(a.size()) != n)
    throw UsageError("--a has " + std::to_string(a.size()) + " entries, expected " + std::to_string(n));
  for (int v : a)
    if (v < 0) throw UsageError("--a entries must be >= 0");
  return AVec(a);
}

std::vector<std::size_t> zero_based(const std::vector<int>& idx, int n) {
  std::vector<std::size_t> out;
  for (int i : idx) {
    if (i < 1 || i > n) throw UsageError("index " + std::to_string(i) + " is outside 1.." + std::to_string(n));
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  return out;
}

struct CoeffArgs {
  int n = 0;
  std::vector<int> a, b;
  bool q = false;
  std::string engine = "expand";
};

int run_coeff(const CoeffArgs& args) {
  const AVec a = make_avec(args.a, args.n);
  if (static_cast<int>(args.b.size()) != args.n) throw UsageError("--b must have n entries");
  if (args.q && args.engine == "goodrec") throw UsageError("--engine goodrec has no q-analogue");
  const ExpVec b(args.b);
  if (args.q)
    std::cout << qdyson_coeff_pruned(a, b).to_string() << "\n";
  else if (args.engine == "goodrec")
    std::cout << good_coeff(b, a).get_str() << "\n";
  else
    std::cout << dyson_coeff_pruned(a, b).get_str() << "\n";
  return kOk;
}

struct ClosedArgs {
  std::string family;
  int n = 0;
  std::vector<int> a, indices;
};

int run_closed(const ClosedArgs& args) {
  static const std::map<std::string, std::pair<CoeffFamily, bool>> families = {
      {"dyson", {CoeffFamily::constant, false}}, {"qdyson", {CoeffFamily::constant, true}},
      {"thm1", {CoeffFamily::thm1, false}},      {"conj1", {CoeffFamily::thm1, true}},
      {"thm2", {CoeffFamily::thm2, false}},      {"conj2", {CoeffFamily::thm2, true}},
      {"thm3", {CoeffFamily::thm3, false}},      {"conj3", {CoeffFamily::thm3, true}},
  };
  const auto it = families.find(args.family);
  if (it == families.end()) throw UsageError("unknown family " + args.family);
  const AVec a = make_avec(args.a, args.n);
  const CoeffSpec spec{it->second.first, zero_based(args.indices, args.n), static_cast<std::size_t>(args.n)};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (it->second.second)
    std::cout << q_value(spec, a).to_string() << "\n";
  else
    std::cout << classical_value(spec, a).get_str() << "\n";
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> families;
  int nmax = 4;
  std::optional<int> amax;
  bool q = false;
  std::string report;
  unsigned jobs = 1;
  std::string fault = "none";
};

int run_verify(const VerifyArgs& args) {
  harness::SweepOptions opts;
  if (args.families.empty() || (args.families.size() == 1 && args.families[0] == "all")) {
    opts.families = harness::default_suite();
  } else {
    for (const auto& name : args.families) {
      auto f = harness::parse_family(name);
      if (!f) throw UsageError("unknown family " + name);
      opts.families.push_back(*f);
    }
  }
  opts.nmax = args.nmax;
  opts.amax = args.amax;
  opts.q = args.q;
  opts.jobs = args.jobs;
  const auto fault = harness::parse_fault(args.fault);
  if (!fault) throw UsageError("unknown fault " + args.fault);
  opts.fault = *fault;
  try {
    harness::validate(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto report = harness::run_sweep(opts);
  if (args.report.empty()) {
    std::cout << harness::emit(report);
  } else {
    std::ofstream out(args.report);
    if (!out) throw UsageError("cannot write " + args.report);
    out << harness::emit(report);
  }
  std::cerr << report.grid << ": " << report.counts.pass << " pass, " << report.counts.fail << " fail\n";
  for (const auto& c : report.cases)
    if (!c.equal) {
      std::cerr << "FAIL " << c.family << " a=";
      for (std::size_t i = 0; i < c.params.a.size(); ++i) std::cerr << (i ? "," : "") << c.params.a[i];
      std::cerr << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "\n";
    }
  return report.all_pass() ? kOk : kFail;
}

struct QDixonArgs {
  std::optional<int> id, a, b, c, alpha, beta;
  int max = 5;
};

int run_qdixon(const QDixonArgs& args) {
  if (args.id && (*args.id < 1 || *args.id > 9)) throw UsageError("--id must be in 1..9");
  const bool triple = args.a || args.b || args.c;
  if (triple && !(args.a && args.b && args.c)) throw UsageError("give all of --a, --b, --c");
  if (triple && (*args.a < 0 || *args.b < 0 || *args.c < 0)) throw UsageError("--a, --b, --c must be >= 0");
  if (args.max < 0) throw UsageError("--max must be >= 0");

  if (args.alpha || args.beta) {
    if (args.id) throw UsageError("--alpha/--beta select the single sum; drop --id");
    if (!triple) throw UsageError("the single sum needs --a, --b, --c");
    std::cout << dixon_sum({*args.a, *args.b, *args.c, args.alpha.value_or(0), args.beta.value_or(0)}).to_string()
              << "\n";
    return kOk;
  }
  if (triple) {
    if (!args.id) throw UsageError("a single triple needs --id");
    const QPoly lhs = dixon_lhs(*args.id, *args.a, *args.b, *args.c);
    const QPoly rhs = dixon_rhs(*args.id, *args.a, *args.b, *args.c);
    std::cout << "lhs: " << lhs.to_string() << "\nrhs: " << rhs.to_string() << "\n";
    return lhs == rhs ? kOk : kFail;
  }
  bool ok = true;
  for (int id = 1; id <= 9; ++id) {
    if (args.id && id != *args.id) continue;
    const auto report = verify_identity(id, args.max);
    std::cout << "identity " << id << ": " << report.checks.size() - report.failures() << "/"
              << report.checks.size() << " triples agree\n";
    for (const auto& c : report.checks)
      if (!c.equal)
        std::cout << "  mismatch at (" << c.a << "," << c.b << "," << c.c << ") from q^"
                  << c.first_diff.value_or(0) << "\n";
    ok = ok && report.all_pass();
  }
  return ok ? kOk : kFail;
}

struct BenchArgs {
  int n = 0;
  int amax = 0;
  bool pruned = false, full = false, q = false;
  std::string kernel;
};

int run_bench(const BenchArgs& args) {
  if (args.n < 1) throw UsageError("--n must be >= 1");
  if (args.amax < 0) throw UsageError("--amax must be >= 0");
  if (!args.kernel.empty()) {
    const auto isa = simd::parse_isa(args.kernel);
    if (!isa || !simd::isa_supported(*isa)) throw UsageError("kernel " + args.kernel + " is not available");
    simd::set_active_isa(*isa);
  }
  const bool run_pruned = args.pruned || !args.full;
  const bool run_full = args.full || !args.pruned;
  const auto limits = ExpansionLimits::from_env();
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
  };

  std::cout << "n,a,engine,terms,micros\n";
  for (int m = 0; m <= args.amax; ++m) {
    const AVec a(std::vector<int>(static_cast<std::size_t>(args.n), m));
    const ExpVec zero(static_cast<std::size_t>(args.n));
    const std::string a_field = "\"" + a.to_string() + "\"";
    std::string pruned_value, full_value;
    if (run_full) {
      ExpansionStats stats;
      const auto t0 = Clock::now();
      full_value = args.q ? build_qdyson(a, limits, &stats).coeff(zero).to_string()
                          : build_dyson(a, limits, &stats).coeff(zero).get_str();
      std::cout << args.n << "," << a_field << ",full," << stats.final_terms << "," << micros(t0) << "\n";
    }
    if (run_pruned) {
      ExpansionStats stats;
      const auto t0 = Clock::now();
      pruned_value = args.q ? qdyson_coeff_pruned(a, zero, limits, &stats).to_string()
                            : dyson_coeff_pruned(a, zero, limits, &stats).get_str();
      std::cout << args.n << "," << a_field << ",pruned," << stats.peak_terms << "," << micros(t0) << "\n";
    }
    if (run_full && run_pruned && full_value != pruned_value) {
      std::cout.flush();
      std::cerr << "engine mismatch at a=" << a.to_string() << ": full " << full_value << ", pruned "
                << pruned_value << "\n";
      std::abort();
    }
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyson and q-Dyson coefficient calculator and verifier"};
  app.set_version_flag("--version", std::string(dyson::kVersion));
  app.require_subcommand(1);

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "one coefficient of the (q-)Dyson product");
  c->add_option("--n", coeff.n, "number of variables")->required()->check(CLI::PositiveNumber);
  c->add_option("--a", coeff.a, "exponents a_1,...,a_n")->required()->delimiter(',');
  c->add_option("--b", coeff.b, "monomial exponents b_1,...,b_n")->required()->delimiter(',');
  c->add_flag("--q", coeff.q, "q-Dyson product");
  c->add_option("--engine", coeff.engine, "expand or goodrec")->check(CLI::IsMember({"expand", "goodrec"}));

  ClosedArgs closed;
  auto* cl = app.add_subcommand("closed", "closed-form value");
  cl->add_option("--family", closed.family, "dyson qdyson thm1 thm2 thm3 conj1 conj2 conj3")->required();
  cl->add_option("--n", closed.n, "number of variables")->required()->check(CLI::PositiveNumber);
  cl->add_option("--a", closed.a, "exponents")->required()->delimiter(',');
  cl->add_option("--indices", closed.indices, "1-based indices r,s,...")->delimiter(',');

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "sweep a grid, closed forms against the expansion");
  v->add_option("--family", verify.families, "family names, or all")->delimiter(',');
  v->add_option("--nmax", verify.nmax, "largest arity");
  v->add_option("--amax", verify.amax, "largest exponent entry");
  v->add_flag("--q", verify.q, "use the q-analogues of dyson/thm*");
  v->add_option("--report", verify.report, "write the JSON report here instead of stdout");
  v->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  v->add_option("--inject-fault", verify.fault, "none or l-off-by-one");

  QDixonArgs qd;
  auto* q = app.add_subcommand("qdixon", "three-variable single sums");
  q->add_option("--id", qd.id, "identity 1..9");
  q->add_option("--a", qd.a);
  q->add_option("--b", qd.b);
  q->add_option("--c", qd.c);
  q->add_option("--alpha", qd.alpha, "exponent of x (single-sum mode)");
  q->add_option("--beta", qd.beta, "exponent of y (single-sum mode)");
  q->add_option("--max", qd.max, "grid bound for a, b, c");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "timing of full and pruned expansion, CSV");
  b->add_option("--n", bench.n)->required();
  b->add_option("--amax", bench.amax)->required();
  b->add_flag("--pruned", bench.pruned);
  b->add_flag("--full", bench.full);
  b->add_flag("--q", bench.q);
  b->add_option("--kernel", bench.kernel, "scalar, avx2 or neon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c->parsed()) return run_coeff(coeff);
    if (cl->parsed()) return run_closed(closed);
    if (v->parsed()) return run_verify(verify);
    if (q->parsed()) return run_qdixon(qd);
    if (b->parsed()) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
