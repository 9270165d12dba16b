#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexobs/links.hpp"
#include "test_support.hpp"

using namespace alexobs;
using testsupport::Rng;

namespace {

const LaurentPoly kTMinusOne = LaurentPoly::from_terms({{1, 1}, {0, -1}});
const LaurentPoly kBrieskorn233 =
    LaurentPoly::from_terms({{4, 1}, {3, 1}, {1, 1}, {0, 1}});

IGammaTable random_igamma(Rng& rng) {
  IGammaTable g;
  // Degree 0 of a link at infinity is t - 1 up to units.
  g.entries[0] = kTMinusOne * LaurentPoly::monomial(
                                  make_rational(testsupport::rand_int(rng, 1, 5),
                                                1),
                                  testsupport::rand_int(rng, -2, 2));
  const int top = static_cast<int>(testsupport::rand_int(rng, 0, 4));
  for (int i = 1; i <= top; ++i) {
    g.entries[i] = testsupport::random_nonzero_poly(rng, 4);
  }
  return g;
}

}  // namespace

TEST_CASE("xi tables from Brieskorn data") {
  const LocalXiTable t1 = xi_from_brieskorn(3, 1, {{2, 3, 3}});
  CHECK(t1.s == 1);
  CHECK(t1.entries.size() == 3);
  CHECK(t1.at(0) == kTMinusOne);
  CHECK(t1.at(1) == LaurentPoly::one());
  CHECK(t1.at(2) == kBrieskorn233);

  const LocalXiTable t2 = xi_from_brieskorn(2, 0, {{3, 3, 2}});
  CHECK(t2.entries.size() == 3);
  CHECK(t2.at(0) == kTMinusOne);
  CHECK(t2.at(1) == LaurentPoly::one());
  CHECK(t2.at(2) == kBrieskorn233);

  const LocalXiTable top = xi_from_brieskorn(3, 3, {{}});
  CHECK(top.entries.size() == 1);
  CHECK(top.at(0) == kTMinusOne);
}

TEST_CASE("xi table arity errors") {
  CHECK_THROWS_AS(xi_from_brieskorn(3, 1, {{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(xi_from_brieskorn(3, 3, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(xi_from_brieskorn(3, 4, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(xi_from_brieskorn(3, -1, {{2}}), std::invalid_argument);
}

TEST_CASE("xi tables never extend past degree n - s") {
  Rng rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 5));
    const int s = static_cast<int>(testsupport::rand_int(rng, 0, n));
    std::vector<long long> exps;
    for (int i = 0; s < n && i < n - s + 1; ++i) {
      exps.push_back(testsupport::rand_int(rng, 2, 5));
    }
    const LocalXiTable table = xi_from_brieskorn(n, s, {exps});
    for (const auto& [l, p] : table.entries) {
      (void)p;
      CHECK(l <= n - s);
      CHECK(l >= 0);
    }
  }
}

TEST_CASE("smooth stratum tables") {
  for (int n : {1, 2, 3}) {
    const LocalXiTable table = xi_smooth(n);
    CHECK(table.s == n);
    CHECK(table.entries.size() == 1);
    CHECK(table.at(0) == kTMinusOne);
  }
}

TEST_CASE("middle entry detects rational homology sphere links") {
  Rng rng(32);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = static_cast<int>(testsupport::rand_int(rng, 1, 4));
    const int s = static_cast<int>(testsupport::rand_int(rng, 0, n - 1));
    std::vector<long long> exps;
    for (int i = 0; i < n - s + 1; ++i) {
      exps.push_back(testsupport::rand_int(rng, 2, 6));
    }
    const LocalXiTable table = xi_from_brieskorn(n, s, {exps});
    CHECK((table.at(n - s).eval_one() != 0) == is_rhs_link({exps}));
  }
}

TEST_CASE("cone recursion example") {
  IGammaTable g1;
  g1.entries[0] = kTMinusOne;
  const IGammaTable g = igamma_cone_circle(3, g1, 1);
  CHECK(g.entries.size() == 2);
  // gcd(t-1, t^3-1) = t-1; entry 0 also picks up gcd(1, t^3-1) = 1.
  CHECK(g.at_or_one(1) == kTMinusOne);
  CHECK(g.at_or_one(0) == kTMinusOne);
}

TEST_CASE("cone recursion rejects bad arguments") {
  IGammaTable g1;
  g1.entries[0] = kTMinusOne;
  CHECK_THROWS_AS(igamma_cone_circle(0, g1, 1), std::invalid_argument);
  CHECK_THROWS_AS(igamma_cone_circle(3, g1, 0), std::invalid_argument);
}

TEST_CASE("cone recursion collapses entries coprime to t^d - 1") {
  IGammaTable g1;
  g1.entries[0] = kTMinusOne;
  g1.entries[1] = LaurentPoly::from_terms({{2, 1}, {1, 1}, {0, 2}});  // no common root
  const IGammaTable g = igamma_cone_circle(2, g1, 2);
  for (const auto& [i, p] : g.entries) {
    (void)i;
    LaurentPoly q = normalize(p);
    while (divides(kTMinusOne, q) && !q.is_unit()) q = exact_div(q, kTMinusOne);
    CHECK(q.is_one());  // everything is a power of t - 1
  }
}

TEST_CASE("cone recursion invariants on random tables") {
  Rng rng(33);
  for (int iter = 0; iter < 200; ++iter) {
    const IGammaTable g1 = random_igamma(rng);
    const long long d = testsupport::rand_int(rng, 1, 8);
    const int k = static_cast<int>(testsupport::rand_int(rng, 1, 5));
    const IGammaTable g = igamma_cone_circle(d, g1, k);
    CHECK(unit_equivalent(g.at_or_one(0), kTMinusOne));
    const LaurentPoly annih_sq =
        LaurentPoly::t_power_minus_one(d) * LaurentPoly::t_power_minus_one(d);
    for (const auto& [i, p] : g.entries) {
      CHECK(i <= k);
      CHECK(divides(p, annih_sq));
    }
  }
}
