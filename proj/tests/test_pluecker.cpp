#include "doctest.h"

#include "iwasawa/error.hpp"
#include "iwasawa/padic_iwasawa.hpp"
#include "iwasawa/pluecker.hpp"
#include "iwasawa/random.hpp"
#include "iwasawa/real_iwasawa.hpp"
#include "oracles.hpp"

using namespace iwasawa;

TEST_CASE("Pluecker and place norm examples") {
  const RatMatrix m{{1, 0}, {Rational::parse("1/5"), 1}};
  const PlueckerVector p1 = pluecker(m, 1);
  CHECK(p1.values() == std::vector<Rational>{Rational::parse("1/5"), 1});
  CHECK(place_norm(p1, Place::finite(5)).valuation == Valuation::finite(-1));
  const std::vector<Rational> v{3, 4};
  CHECK(place_norm(v, Place::infinite()).squared == Rational(25));
  const DilatonNorm d = dilaton_norm_unified(RatMatrix{{2, 0}, {0, Rational::parse("1/2")}}, 1, Place::infinite());
  CHECK(d.y_squared == Rational(4));
  CHECK(d.exact_value() == Rational(4));
}

TEST_CASE("norm errors") {
  const std::vector<Rational> zero{0, 0};
  CHECK_THROWS_WITH_AS(place_norm(zero, Place::finite(3)), doctest::Contains("ZeroVector"), Error);
  CHECK_THROWS_WITH_AS(place_norm(zero, Place::infinite()), doctest::Contains("ZeroVector"), Error);
  CHECK_THROWS_AS(pluecker(RatMatrix::identity(3), 3), Error);
  CHECK_THROWS_AS(pluecker(RatMatrix::identity(3), 0), Error);
  CHECK_THROWS_AS(dilaton_norm_unified(RatMatrix::identity(3), 3, Place::infinite()), Error);
}

TEST_CASE("finite-place norms reproduce the dilaton valuations") {
  MatrixGenerator gen(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 6));
    const RatMatrix m = gen.special_linear(n);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      const Prime prime(p);
      const auto expected = dilaton_valuations(m, prime);
      for (std::size_t k = 1; k < n; ++k) {
        const DilatonNorm d = dilaton_norm_unified(m, k, Place::finite(prime));
        CHECK(d.valuation == expected[k - 1]);
        CHECK(d.exact_value() == padic_norm(expected[k - 1], prime));
      }
    }
  }
}

TEST_CASE("real-place norms reproduce the squared dilatons") {
  MatrixGenerator gen(62);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const RatMatrix m = gen.special_linear(n);
    const auto ad = real_axions_dilatons(m);
    for (std::size_t k = 1; k < n; ++k)
      CHECK(dilaton_norm_unified(m, k, Place::infinite()).y_squared == ad.dilatons_squared[k - 1]);
  }
}

TEST_CASE("Gram determinant of the last rows is the sum of squared anti-leading minors") {
  MatrixGenerator gen(63);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const RatMatrix m = gen.rational_matrix(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t i = n - k; i < n; ++i) rows.push_back(m.row(i));
      Rational sum;
      for (const auto& cols : oracle::subsets(n, k)) {
        const Rational x = oracle::minor(m, oracle::range(n - k, n), cols);
        sum += x * x;
      }
      CHECK(epsilon_product(rows, rows) == sum);
    }
  }
}

TEST_CASE("table agrees with single calls") {
  MatrixGenerator gen(64);
  const std::vector<Place> places{Place::finite(2), Place::finite(3), Place::infinite()};
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const RatMatrix m = gen.special_linear(n);
    const auto table = dilaton_norm_table(m, places);
    REQUIRE(table.size() == n - 1);
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t c = 0; c < places.size(); ++c) {
        const DilatonNorm single = dilaton_norm_unified(m, k, places[c]);
        CHECK(table[k - 1][c].k == k);
        CHECK(table[k - 1][c].exact_value() == single.exact_value());
      }
  }
  const auto id = dilaton_norm_table(RatMatrix::identity(3), places);
  for (const auto& row : id)
    for (const auto& cell : row) CHECK(cell.exact_value() == Rational(1));
}

TEST_CASE("finite place norms are invariant under SL(n, Z_p)") {
  MatrixGenerator gen(65);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const Prime p(t % 2 ? 3 : 2);
    const RatMatrix m = gen.rational_matrix(n, n);
    const RatMatrix k = gen.compact_element(n, p);
    for (std::size_t order = 1; order <= n; ++order) {
      const auto before = anti_leading_minors(m, order);
      const auto after = anti_leading_minors(m * k, order);
      std::vector<Rational> a, b;
      for (const auto& e : before) a.push_back(e.value);
      for (const auto& e : after) b.push_back(e.value);
      bool zero = true;
      for (const auto& x : a) zero = zero && x.is_zero();
      if (zero) continue;
      CHECK(place_norm(a, Place::finite(p)).valuation == place_norm(b, Place::finite(p)).valuation);
    }
  }
}
