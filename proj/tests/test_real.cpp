#include "doctest.h"

#include <cmath>

#include "iwasawa/error.hpp"
#include "iwasawa/lu_ul.hpp"
#include "iwasawa/real_iwasawa.hpp"
#include "iwasawa/random.hpp"
#include "oracles.hpp"

using namespace iwasawa;

TEST_CASE("real examples") {
  SUBCASE("unipotent") {
    const auto ad = real_axions_dilatons(RatMatrix{{1, 1}, {0, 1}});
    CHECK(ad.N(0, 1) == Rational(1));
    CHECK(ad.dilatons_squared == std::vector<Rational>{1});
  }
  SUBCASE("torus") {
    const RealIwasawa dec = real_decompose(RatMatrix{{2, 0}, {0, Rational::parse("1/2")}});
    CHECK(dec.N == RatMatrix::identity(2));
    CHECK(dec.dilatons_squared == std::vector<Rational>{4});
    CHECK(dec.a_diagonal[0] == doctest::Approx(2.0));
    CHECK(dec.a_diagonal[1] == doctest::Approx(0.5));
  }
  SUBCASE("rotation") {
    const RatMatrix m{{0, -1}, {1, 0}};
    const RealIwasawa dec = real_decompose(m);
    CHECK(dec.N == RatMatrix::identity(2));
    CHECK(dec.a_diagonal == std::vector<double>{1.0, 1.0});
    CHECK(dec.K(0, 1) == -1.0);
    CHECK(dec.K(1, 0) == 1.0);
    CHECK(dec.residuals.reconstruction == 0.0);
  }
}

TEST_CASE("closed forms match exact bottom-up Gram-Schmidt") {
  MatrixGenerator gen(51);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const RatMatrix m = t % 2 ? gen.special_linear(n) : gen.special_linear_integer(n);
    const AxionsDilatons ad = real_axions_dilatons(m);
    const auto gs = oracle::gram_schmidt_bottom_up(m);
    CHECK(ad.N == gs.N);
    Rational y2 = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      y2 *= gs.squared_lengths[k];
      CHECK(ad.dilatons_squared[k] == y2);
    }
  }
}

TEST_CASE("closed forms equal the UL factors of M M^T") {
  MatrixGenerator gen(52);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const RatMatrix m = gen.special_linear(n);
    const AxionsDilatons ad = real_axions_dilatons(m);
    const ULResult ul = ul_decompose(m * m.transpose(), SignedPermutation::identity(n));
    CHECK(ad.N == ul.V);
    Rational y2 = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      y2 *= ul.Delta(k, k);
      CHECK(ad.dilatons_squared[k] == y2);
    }
  }
}

TEST_CASE("floating realization meets the tolerances and verifies") {
  MatrixGenerator gen(53);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const RatMatrix m = gen.special_linear(n);
    const RealIwasawa dec = real_decompose(m);
    CHECK(dec.residuals.orthogonality <= kRealTolerance);
    CHECK(dec.residuals.reconstruction <= kRealTolerance * dec.residuals.matrix_scale);
    double det_a = 1;
    for (double a : dec.a_diagonal) det_a *= a;
    CHECK(det_a == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(verify_real(dec).all_pass());
  }
}

TEST_CASE("verification catches tampering") {
  MatrixGenerator gen(54);
  const RatMatrix m = gen.special_linear(3);
  RealIwasawa dec = real_decompose(m);

  RealIwasawa bad_k = dec;
  bad_k.K(0, 0) += 1e-3;
  const auto k_report = verify_real(bad_k);
  CHECK_FALSE(k_report.all_pass());
  CHECK_FALSE(k_report.find("K_orthogonal")->pass);

  RealIwasawa bad_n = dec;
  bad_n.N(0, 2) += Rational(1);
  CHECK_FALSE(verify_real(bad_n).find("closed_forms")->pass);

  RealIwasawa bad_y = dec;
  bad_y.dilatons_squared[0] *= Rational(2);
  CHECK_FALSE(verify_real(bad_y).find("closed_forms")->pass);
}

TEST_CASE("real input validation") {
  CHECK_THROWS_WITH_AS(real_decompose(RatMatrix{{1, 2}, {3, 4}}), doctest::Contains("NotSpecialLinear"), Error);
  CHECK_THROWS_WITH_AS(real_decompose(RatMatrix{{1, 1}, {1, 2}}, 0.0), doctest::Contains("PrecisionLoss"), Error);
}
