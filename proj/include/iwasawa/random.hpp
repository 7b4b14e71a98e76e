#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "iwasawa/matrix.hpp"
#include "iwasawa/padic_iwasawa.hpp"

namespace iwasawa {

// Seeded generator for the fuzz inputs used by the identity suite, the CLI
// and the tests. Same seed, same sequence.
class MatrixGenerator {
 public:
  explicit MatrixGenerator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  // num in [-9, 9], den in [1, 12]
  Rational small_rational();
  // +-(small unit) * p^e over a few small primes, never zero
  Rational scaled_rational();

  RatMatrix rational_matrix(std::size_t rows, std::size_t cols);
  RatMatrix nonsingular(std::size_t n);

  RatMatrix unit_upper(std::size_t n, bool integer_entries);
  RatMatrix unit_lower(std::size_t n, bool integer_entries);
  SignedPermutation signed_permutation(std::size_t n);
  // Diagonal, det 1, entries built from powers of 2, 3, 5, 7.
  RatMatrix torus(std::size_t n);

  // Product of integer unit triangular matrices and signed permutations.
  RatMatrix special_linear_integer(std::size_t n);
  // Mixes rational unit triangulars, a torus, and an integer SL(n, Z) factor.
  RatMatrix special_linear(std::size_t n);

  // Element of SL(n, Z_p): unit triangulars whose entries have denominators
  // prime to p, signed permutations and a p-unit torus.
  RatMatrix compact_element(std::size_t n, Prime p);
  // Random valid (X, Y) at p.
  FamilyParams family_params(std::size_t n, Prime p);

  std::mt19937_64& engine() { return rng_; }

 private:
  Rational padic_integer(Prime p);
  Rational padic_unit(Prime p);

  std::mt19937_64 rng_;
};

}  // namespace iwasawa
