#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyson/dyson_product.hpp"
#include "dyson/qcombinat.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cstdlib>

using namespace dyson;

namespace {

std::vector<int> vec(const AVec& a) { return {a.begin(), a.end()}; }
std::vector<int> vec(const ExpVec& e) { return {e.begin(), e.end()}; }

// Small arities whose oracle expansion stays under 2^18 subsets.
std::vector<AVec> oracle_grid() {
  std::vector<AVec> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const AVec& a : all_avecs(n, n <= 3 ? 2 : 1)) {
      const long f = static_cast<long>(n - 1) * a.sigma();
      if (f <= 18) out.push_back(a);
    }
  return out;
}

} // namespace

TEST_CASE("factor list") {
  auto fs = dyson_factors(AVec{1, 0, 2});
  // pairs (0,1): a_1 = 0 skipped, a_0 = 1; (0,2): 2, 1; (1,2): 2, 0 skipped
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].up == 1);
  CHECK(fs[0].down == 0);
  CHECK(fs[1].power == 2);
  CHECK(fs[1].q_shifted);
  CHECK_FALSE(fs[2].q_shifted);
  CHECK(classical_row({0, 1, 3, false}) == std::vector<BigInt>{1, -3, 3, -1});
  auto row = q_row({0, 1, 2, true});
  CHECK(row[1] == -QPoly{0, 1, 1});
  CHECK(row[2] == QPoly{0, 0, 0, 1});
  CHECK(q_row({0, 1, 2, false})[2] == QPoly{0, 1});
}

TEST_CASE("spec examples") {
  CHECK(build_qdyson(AVec{1, 1, 1}).coeff(ExpVec{0, 0, 0}) == QPoly{1, 2, 2, 1});
  CHECK(build_qdyson(AVec{1, 1, 1}).coeff(ExpVec{1, 0, -1}) == QPoly{0, -1, -1});
  CHECK(build_dyson(AVec{1, 1, 1}).coeff(ExpVec{1, 0, -1}) == -2);
  CHECK(build_dyson(AVec{2, 2}).coeff(ExpVec{0, 0}) == 6);
}

TEST_CASE("frozen coefficients") {
  struct Row {
    AVec a;
    ExpVec b;
    long classical;
    QPoly q;
  };
  const std::vector<Row> rows = {
      {{1, 1, 1}, {1, 0, -1}, -2, {0, -1, -1}},
      {{2, 1, 1}, {2, -1, -1}, 2, {0, 0, 1, 1}},
      {{1, 1, 1, 1}, {1, 1, -1, -1}, 4, {0, 0, 0, 1, 2, 1}},
      {{2, 1, 1}, {-1, 2, -1}, 7, {0, 1, 1, 2, 2, 1}},
      {{1, 2, 1}, {0, 1, -1}, -3, {0, 0, -1, -1, -1}},
      {{2, 2, 1}, {1, 1, -2}, 6, {0, 0, 1, 1, 2, 1, 1}},
  };
  for (const auto& r : rows) {
    CAPTURE(r.a.to_string());
    CHECK(build_dyson(r.a).coeff(r.b) == r.classical);
    CHECK(build_qdyson(r.a).coeff(r.b) == r.q);
    CHECK(dyson_coeff_pruned(r.a, r.b) == r.classical);
    CHECK(qdyson_coeff_pruned(r.a, r.b) == r.q);
  }
}

TEST_CASE("expansion agrees with the subset oracle") {
  for (const AVec& a : oracle_grid()) {
    CAPTURE(a.to_string());
    const auto ex_c = oracle::expand(vec(a), false);
    const auto ex_q = oracle::expand(vec(a), true);
    const auto pc = build_dyson(a);
    const auto pq = build_qdyson(a);
    CHECK(pc.size() == ex_c.size());
    CHECK(pq.size() == ex_q.size());
    for (const auto& [e, c] : pq.terms()) {
      CHECK(testutil::to_small(c) == oracle::coeff(ex_q, vec(e)));
      CHECK(pc.coeff(e) == oracle::at_one(oracle::coeff(ex_c, vec(e))));
    }
  }
}

TEST_CASE("structural invariants") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const AVec& a : all_avecs(n, n <= 3 ? 2 : 1)) {
      CAPTURE(a.to_string());
      const auto pc = build_dyson(a);
      const auto pq = build_qdyson(a);
      const long sig = a.sigma();
      for (const auto& [e, c] : pq.terms()) {
        CHECK(e.total() == 0);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(e[i] <= sig - a[i]);
          CHECK(e[i] >= -static_cast<long>(n - 1) * a[i]);
        }
        // q = 1 specialisation
        CHECK(c.eval_at_one() == pc.coeff(e));
      }
      CHECK(pq.coeff(ExpVec(n)) == q_multinomial(a));
      CHECK(pc.coeff(ExpVec(n)) == multinomial(a));
    }
}

TEST_CASE("classical coefficients are invariant under relabelling") {
  const AVec a{2, 1, 0};
  const auto base = build_dyson(a);
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    AVec pa(std::vector<int>{a[perm[0]], a[perm[1]], a[perm[2]]});
    const auto p = build_dyson(pa);
    for (const auto& [e, c] : base.terms()) {
      ExpVec pe{e[perm[0]], e[perm[1]], e[perm[2]]};
      CHECK(p.coeff(pe) == c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("pruned coefficient equals full expansion") {
  for (const AVec& a : all_avecs(3, 2)) {
    const auto pq = build_qdyson(a);
    for (const auto& [e, c] : pq.terms()) CHECK(qdyson_coeff_pruned(a, e) == c);
    CHECK(qdyson_coeff_pruned(a, ExpVec{1, 0, 0}).is_zero());
    CHECK(dyson_coeff_pruned(a, ExpVec{9, -9, 0}) == 0);
  }
  ExpansionStats full, pruned;
  build_dyson(AVec{3, 3, 3}, {}, &full);
  dyson_coeff_pruned(AVec{3, 3, 3}, ExpVec{0, 0, 0}, {}, &pruned);
  CHECK(pruned.peak_terms < full.peak_terms);
}

TEST_CASE("golden text form") {
  const std::string expected =
      "-1,1: -1\n"
      "0,0: 2\n"
      "1,-1: -1\n";
  CHECK(build_dyson(AVec{1, 1}).to_text() == expected);
  CHECK(build_qdyson(AVec{1, 1}).to_text() == "-1,1: -1\n0,0: 1 + q\n1,-1: -q\n");
  CHECK(build_dyson(AVec{0, 0, 0}).to_text() == "0,0,0: 1\n");
}

TEST_CASE("term cap and arity errors") {
  ExpansionLimits tiny{10};
  CHECK_THROWS_AS(build_dyson(AVec{3, 3, 3}, tiny), ResourceLimitExceeded);
  CHECK_THROWS_AS(build_qdyson(AVec{3, 3, 3}, tiny), ResourceLimitExceeded);
  CHECK_THROWS_AS(build_dyson(AVec{1, 1}).coeff(ExpVec{0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dyson_coeff_pruned(AVec{1, 1}, ExpVec{0}), std::invalid_argument);
  CHECK_THROWS_AS(AVec({1, -1}), std::invalid_argument);

  setenv("DYSON_TERM_CAP", "7", 1);
  CHECK(ExpansionLimits::from_env().max_terms == 7);
  unsetenv("DYSON_TERM_CAP");
  CHECK(ExpansionLimits::from_env().max_terms == ExpansionLimits::kDefaultMaxTerms);
}

TEST_CASE("laurent multiplication") {
  LaurentPoly<BigInt> x(2), y(2);
  x.add_term(ExpVec{1, -1}, 1);
  x.add_term(ExpVec{0, 0}, 1);
  y.add_term(ExpVec{-1, 1}, 1);
  y.add_term(ExpVec{0, 0}, -1);
  auto p = x * y;
  CHECK(p.coeff(ExpVec{0, 0}) == 0);
  CHECK(p.size() == 2);
  CHECK(p.coeff(ExpVec{1, -1}) == -1);
  CHECK(p.coeff(ExpVec{-1, 1}) == 1);
  CHECK_THROWS_AS(x * LaurentPoly<BigInt>(3), std::invalid_argument);
  CHECK(LaurentPoly<BigInt>::one(2) * x == x);
}
