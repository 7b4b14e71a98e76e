#include "doctest.h"

#include "iwasawa/error.hpp"
#include "iwasawa/identities.hpp"
#include "iwasawa/random.hpp"
#include "oracles.hpp"

using namespace iwasawa;
using oracle::cat;
using oracle::range;
using Idx = std::vector<std::size_t>;

namespace {

// Rebuilds the lemma1 sides from cofactor minors.
std::pair<Rational, Rational> lemma1_sides(const RatMatrix& m, const Idx& r, const Idx& c, const Idx& d) {
  const Idx tail(r.begin() + 1, r.end());
  Rational lhs = oracle::minor(m, r, c) * oracle::minor(m, tail, d);
  Rational rhs;
  for (std::size_t a = 0; a < c.size(); ++a) {
    Idx rest;
    for (std::size_t b = 0; b < c.size(); ++b)
      if (b != a) rest.push_back(c[b]);
    Rational term = oracle::minor(m, r, cat({c[a]}, d)) * oracle::minor(m, tail, rest);
    rhs += a % 2 == 0 ? term : -term;
  }
  return {lhs, rhs};
}

}  // namespace

TEST_CASE("checkers report both sides and agree with cofactor evaluation") {
  MatrixGenerator gen(71);
  std::size_t nonzero = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const RatMatrix m = gen.rational_matrix(n, n);
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(n) - 1));
    const Idx r = range(n - k - 1, n), c = range(0, k), d = range(n - k + 1, n);
    const IdentityReport l1 = lemma1_check(m, Idx(r.begin() + 1, r.end()), c, d);
    const auto sides = lemma1_sides(m, Idx(r.begin() + 1, r.end()), c, d);
    CHECK(l1.identity == IdentityKind::Lemma1);
    CHECK(l1.lhs == sides.first);
    CHECK(l1.rhs == sides.second);
    CHECK(l1.pass);
    nonzero += !l1.lhs.is_zero();

    const IdentityReport s1 = speciallemma1_check(m, r, c);
    CHECK(s1.pass);
    const IdentityReport l2 = lemma2_check(m, r, c);
    CHECK(l2.pass);
    nonzero += !l2.lhs.is_zero();
  }
  CHECK(nonzero > 50);
}

TEST_CASE("telescope checks on every admissible index triple") {
  MatrixGenerator gen(72);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RatMatrix m = gen.nonsingular(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t nu = 0; nu <= r; ++nu)
        for (std::size_t mu = 0; mu < nu; ++mu) {
          CHECK(telescope_check(m, mu, nu, r).pass);
          const auto q = telescope_quotient_check(m, mu, nu, r);
          REQUIRE(q.has_value());
          CHECK(q->pass);
        }
  }
}

TEST_CASE("checker argument validation") {
  const RatMatrix m = RatMatrix::identity(3);
  CHECK_THROWS_WITH_AS(lemma1_check(m, Idx{0, 1}, Idx{0}, Idx{}), doctest::Contains("IndexOutOfRange"), Error);
  CHECK_THROWS_AS(speciallemma1_check(m, Idx{0}, Idx{0}), Error);
  CHECK_THROWS_AS(lemma2_check(m, Idx{0, 1, 2}, Idx{0}), Error);
  CHECK_THROWS_AS(lemma1_check(m, Idx{0}, Idx{5}, Idx{}), Error);
  CHECK_THROWS_AS(telescope_check(m, 2, 1, 2), Error);
  CHECK_THROWS_AS(telescope_check(m, 1, 1, 2), Error);
  CHECK_THROWS_AS(telescope_check(m, 0, 1, 3), Error);
}

TEST_CASE("repeated indices make both sides vanish consistently") {
  MatrixGenerator gen(73);
  const RatMatrix m = gen.rational_matrix(4, 4);
  const IdentityReport r = lemma1_check(m, Idx{1, 1, 3}, Idx{0, 2, 3}, Idx{0, 1});
  CHECK(r.pass);
  CHECK(r.lhs.is_zero());
}

TEST_CASE("suite runs clean and is deterministic") {
  IdentitySuiteConfig config;
  config.sizes = {2, 3, 5};
  config.trials = 3;
  config.seed = 9;
  config.tuple_cap = 40;
  const IdentitySuiteReport a = run_identity_suite(config);
  const IdentitySuiteReport b = run_identity_suite(config);
  CHECK(a.all_pass());
  CHECK(a.failures.empty());
  for (std::size_t i = 0; i < kIdentityKinds; ++i) {
    CHECK(a.tallies[i].checked > 0);
    CHECK(a.tallies[i].checked == b.tallies[i].checked);
  }
  CHECK(to_string(IdentityKind::SpecialLemma1) == "speciallemma1");
}
