#include "doctest.h"

#include "iwasawa/error.hpp"
#include "iwasawa/padic_iwasawa.hpp"
#include "iwasawa/random.hpp"
#include "oracles.hpp"

using namespace iwasawa;

namespace {

const Rational kFifth = Rational::parse("1/5");

// -min over column subsets of v_p(anti-leading minor), each minor by cofactors.
std::vector<long> brute_force_valuations(const RatMatrix& m, unsigned long p) {
  const std::size_t n = m.rows();
  std::vector<long> out(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    bool seen = false;
    long best = 0;
    for (const auto& cols : oracle::subsets(n, k)) {
      const Rational v = oracle::minor(m, oracle::range(n - k, n), cols);
      if (v.is_zero()) continue;
      const long val = oracle::valuation(v, p);
      best = seen ? std::min(best, val) : val;
      seen = true;
    }
    REQUIRE(seen);
    out[n - k - 1] = -best;
  }
  return out;
}

std::vector<long> finite(const std::vector<Valuation>& vs) {
  std::vector<long> out;
  for (const auto& v : vs) out.push_back(v.value());
  return out;
}

bool integral(const RatMatrix& m, unsigned long p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && oracle::valuation(m(i, j), p) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("decomposition of the 2x2 example at p = 5") {
  const RatMatrix m{{1, 0}, {kFifth, 1}};
  const PadicIwasawa dec = decompose_padic(m, Prime(5));
  CHECK(dec.N == RatMatrix{{1, 5}, {0, 1}});
  CHECK(dec.A == RatMatrix{{5, 0}, {0, kFifth}});
  CHECK(dec.K == RatMatrix{{0, -1}, {1, 5}});
  REQUIRE(dec.dilaton_valuations.size() == 1);
  CHECK(dec.dilaton_valuations[0] == Valuation::finite(1));
  CHECK(dilaton_valuations(m, Prime(5)) == dec.dilaton_valuations);
  CHECK(verify_membership(dec, Prime(5)).all_pass());
}

TEST_CASE("family move on the identity decomposition") {
  const PadicIwasawa dec = decompose_padic(RatMatrix::identity(2), Prime(3));
  CHECK(dec.N == RatMatrix::identity(2));
  CHECK(dec.A == RatMatrix::identity(2));
  CHECK(dec.K == RatMatrix::identity(2));
  const FamilyParams params{RatMatrix{{1, 1}, {0, 1}}, RatMatrix::identity(2)};
  const PadicIwasawa moved = apply_family(dec, params, Prime(3));
  CHECK(moved.N == RatMatrix{{1, 1}, {0, 1}});
  CHECK(moved.K == RatMatrix{{1, -1}, {0, 1}});
  CHECK(verify_membership(moved, Prime(3)).all_pass());
}

TEST_CASE("verification flags broken decompositions") {
  const PadicIwasawa dec = decompose_padic(RatMatrix{{1, 0}, {kFifth, 1}}, Prime(5));

  PadicIwasawa bad_k = dec;
  bad_k.K(0, 0) = kFifth;
  const auto k_report = verify_membership(bad_k, Prime(5));
  CHECK_FALSE(k_report.find("K_integral")->pass);
  CHECK_FALSE(k_report.all_pass());

  PadicIwasawa bad_a = dec;
  bad_a.A(0, 0) *= Rational(5);
  const auto a_report = verify_membership(bad_a, Prime(5));
  CHECK_FALSE(a_report.find("reconstruction")->pass);
  CHECK_FALSE(a_report.find("A_det_one")->pass);
  CHECK(a_report.find("K_integral")->pass);

  PadicIwasawa bad_shape = dec;
  bad_shape.N = RatMatrix::identity(3);
  CHECK_FALSE(verify_membership(bad_shape, Prime(5)).find("shapes")->pass);
}

TEST_CASE("input validation") {
  CHECK_THROWS_WITH_AS(decompose_padic(RatMatrix{{1, 2}, {3, 4}}, Prime(5)), doctest::Contains("NotSpecialLinear"),
                       Error);
  CHECK_THROWS_WITH_AS(decompose_padic(RatMatrix{{1, 2}, {2, 4}}, Prime(5)), doctest::Contains("SingularMatrix"),
                       Error);
  CHECK_THROWS_WITH_AS(decompose_padic(RatMatrix{{1, 2, 3}}, Prime(5)), doctest::Contains("DimensionMismatch"), Error);
  CHECK_THROWS_WITH_AS(dilaton_valuations(RatMatrix{{2, 0}, {0, 1}}, Prime(5)), doctest::Contains("NotSpecialLinear"),
                       Error);
}

TEST_CASE("random special linear matrices decompose exactly at several primes") {
  MatrixGenerator gen(41);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 101ul}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
      const RatMatrix m = t % 2 ? gen.special_linear(n) : gen.special_linear_integer(n);
      const Prime prime(p);
      const PadicIwasawa dec = decompose_padic(m, prime);
      CHECK(dec.N * dec.A * dec.K == m);
      CHECK(is_unit_upper_triangular(dec.N));
      CHECK(is_diagonal(dec.A));
      CHECK(oracle::det(dec.A) == Rational(1));
      CHECK(oracle::det(dec.K) == Rational(1));
      CHECK(integral(dec.K, p));
      CHECK(verify_membership(dec, prime).all_pass());
      if (n >= 2) {
        const auto expected = brute_force_valuations(m, p);
        CHECK(finite(dec.dilaton_valuations) == expected);
        CHECK(finite(dilaton_valuations(m, prime)) == expected);
        CHECK(dilaton_valuations_through_column(m, prime, max_norm_column(m, prime)) == dec.dilaton_valuations);
      }
    }
  }
}

TEST_CASE("pivot column picks the largest bottom-row norm, smallest index on ties") {
  const RatMatrix m{{1, 0, 0}, {0, 1, 0}, {Rational(4), kFifth * Rational(2), kFifth}};
  CHECK(max_norm_column(m, Prime(5)) == 1);
  CHECK(max_norm_column(m, Prime(2)) == 2);
  CHECK(max_norm_column(RatMatrix::identity(3), Prime(3)) == 2);
}

TEST_CASE("dilatons are products of the torus diagonal") {
  const RatMatrix a = RatMatrix::diagonal(std::vector<Rational>{2, 3, Rational::parse("1/6")});
  CHECK(dilatons_from_torus(a) == std::vector<Rational>{2, 6});
}

TEST_CASE("family parameters are validated") {
  const PadicIwasawa dec = decompose_padic(RatMatrix{{1, 0}, {kFifth, 1}}, Prime(5));
  const RatMatrix id = RatMatrix::identity(2);
  auto rejects = [&](const RatMatrix& x, const RatMatrix& y, Prime p) {
    CHECK_THROWS_WITH_AS(apply_family(dec, FamilyParams{x, y}, p), doctest::Contains("InvalidFamilyParams"), Error);
  };
  rejects(RatMatrix{{1, kFifth}, {0, 1}}, id, Prime(5));         // X not integral
  rejects(RatMatrix{{2, 0}, {0, 1}}, id, Prime(5));              // X not unit upper
  rejects(id, RatMatrix{{5, 0}, {0, kFifth}}, Prime(5));         // Y not units
  rejects(id, RatMatrix{{2, 0}, {0, 1}}, Prime(5));              // det Y != 1
  rejects(id, RatMatrix{{1, 1}, {0, 1}}, Prime(5));              // Y not diagonal
  rejects(RatMatrix::identity(3), id, Prime(5));                 // size
  rejects(id, id, Prime(3));                                     // prime mismatch
}

TEST_CASE("family moves keep reconstruction, membership and valuations") {
  MatrixGenerator gen(42);
  for (unsigned long p : {2ul, 3ul, 7ul}) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
      const Prime prime(p);
      const PadicIwasawa dec = decompose_padic(gen.special_linear(n), prime);
      const PadicIwasawa moved = apply_family(dec, gen.family_params(n, prime), prime);
      CHECK(moved.N * moved.A * moved.K == dec.M);
      CHECK(verify_membership(moved, prime).all_pass());
      CHECK(moved.dilaton_valuations == dec.dilaton_valuations);
    }
  }
}

TEST_CASE("valuations are invariant under N-side and K-side multiplication") {
  MatrixGenerator gen(43);
  for (unsigned long p : {2ul, 5ul}) {
    const Prime prime(p);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
      const RatMatrix m = gen.special_linear(n);
      const auto base = dilaton_valuations(m, prime);
      CHECK(dilaton_valuations(gen.unit_upper(n, false) * m, prime) == base);
      const RatMatrix k = gen.compact_element(n, prime);
      CHECK(integral(k, p));
      CHECK(oracle::det(k) == Rational(1));
      CHECK(dilaton_valuations(m * k, prime) == base);
    }
  }
}
