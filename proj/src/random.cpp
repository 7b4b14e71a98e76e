#include "iwasawa/random.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace iwasawa {

namespace {

Rational power(long base, long exp) {
  Rational out = 1;
  for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) out *= base;
  return exp < 0 ? out.inverse() : out;
}

}  // namespace

long MatrixGenerator::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational MatrixGenerator::small_rational() {
  return Rational(mpz_class(integer(-9, 9)), mpz_class(integer(1, 12)));
}

Rational MatrixGenerator::scaled_rational() {
  constexpr std::array<long, 4> primes{2, 3, 5, 7};
  Rational value = integer(1, 4) * (coin() ? 1 : -1);
  for (long p : primes) value *= power(p, integer(-2, 2));
  return value;
}

RatMatrix MatrixGenerator::rational_matrix(std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational();
  return m;
}

RatMatrix MatrixGenerator::nonsingular(std::size_t n) {
  while (true) {
    RatMatrix m = rational_matrix(n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

RatMatrix MatrixGenerator::unit_upper(std::size_t n, bool integer_entries) {
  RatMatrix m = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (integer(0, 3) == 0) continue;  // keep some zeros
      m(i, j) = integer_entries ? Rational(integer(-3, 3)) : scaled_rational();
    }
  return m;
}

RatMatrix MatrixGenerator::unit_lower(std::size_t n, bool integer_entries) {
  return unit_upper(n, integer_entries).transpose();
}

SignedPermutation MatrixGenerator::signed_permutation(std::size_t n) {
  std::vector<std::size_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  std::shuffle(mapping.begin(), mapping.end(), rng_);
  return SignedPermutation::with_positive_determinant(std::move(mapping));
}

RatMatrix MatrixGenerator::torus(std::size_t n) {
  std::vector<Rational> diag(n, Rational(1));
  Rational product = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diag[i] = scaled_rational();
    product *= diag[i];
  }
  diag[n - 1] = product.inverse();
  return RatMatrix::diagonal(diag);
}

RatMatrix MatrixGenerator::special_linear_integer(std::size_t n) {
  RatMatrix m = RatMatrix::identity(n);
  const long factors = integer(2, 4);
  for (long f = 0; f < factors; ++f) {
    m = m * unit_upper(n, true) * signed_permutation(n).matrix() * unit_lower(n, true);
  }
  return m;
}

RatMatrix MatrixGenerator::special_linear(std::size_t n) {
  return unit_upper(n, false) * torus(n) * unit_lower(n, false) * signed_permutation(n).matrix() *
         special_linear_integer(n);
}

Rational MatrixGenerator::padic_unit(Prime p) {
  const long pv = static_cast<long>(std::min<std::uint64_t>(p.value(), 1000));
  auto coprime = [&](long lo, long hi) {
    while (true) {
      long v = integer(lo, hi);
      if (v != 0 && v % pv != 0) return v;
    }
  };
  return Rational(mpz_class(coprime(-20, 20)), mpz_class(std::labs(coprime(1, 20))));
}

Rational MatrixGenerator::padic_integer(Prime p) {
  Rational u = padic_unit(p);
  long e = integer(0, 2);
  for (long i = 0; i < e; ++i) u *= static_cast<long>(std::min<std::uint64_t>(p.value(), 1000));
  return integer(0, 4) == 0 ? Rational(0) : u;
}

RatMatrix MatrixGenerator::compact_element(std::size_t n, Prime p) {
  RatMatrix upper = RatMatrix::identity(n);
  RatMatrix lower = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      upper(i, j) = padic_integer(p);
      lower(j, i) = padic_integer(p);
    }
  std::vector<Rational> diag(n, Rational(1));
  Rational product = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diag[i] = padic_unit(p);
    product *= diag[i];
  }
  diag[n - 1] = product.inverse();
  return upper * signed_permutation(n).matrix() * RatMatrix::diagonal(diag) * lower;
}

FamilyParams MatrixGenerator::family_params(std::size_t n, Prime p) {
  FamilyParams params;
  params.X = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) params.X(i, j) = padic_integer(p);
  std::vector<Rational> diag(n, Rational(1));
  Rational product = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diag[i] = padic_unit(p);
    product *= diag[i];
  }
  diag[n - 1] = product.inverse();
  params.Y = RatMatrix::diagonal(diag);
  return params;
}

}  // namespace iwasawa
