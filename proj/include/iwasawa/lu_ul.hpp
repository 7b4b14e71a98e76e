#pragma once

#include <cstddef>
#include <vector>

#include "iwasawa/matrix.hpp"

namespace iwasawa {

// M = L * D * U * P^-1 with L unit lower, D diagonal, U unit upper and P a
// column permutation with determinant +1. The leading principal minors of M*P
// are all nonzero.
struct LUResult {
  RatMatrix L;
  RatMatrix D;
  RatMatrix U;
  SignedPermutation P;
};

// M = V * Delta * Lambda * Pi^-1 with V unit upper, Delta diagonal, Lambda
// unit lower. Pi moves the chosen column to the rightmost position and makes
// every anti-leading principal minor of M*Pi nonzero.
//
// etas[p-1] holds eta_p = 1 / (M*Pi)(p+1..n; p+1..n) for p = 1..n-1, so that
// Delta = diag(eta_1 / eta_0, eta_2 / eta_1, ..., 1 / eta_{n-1}) with
// eta_0 = 1 / det(M).
struct ULResult {
  RatMatrix V;
  RatMatrix Delta;
  RatMatrix Lambda;
  SignedPermutation Pi;
  std::vector<Rational> etas;
};

// Column permutation for LU: top-down elimination, smallest usable column first.
SignedPermutation find_leading_permutation(const RatMatrix& m);

// Bottom-up elimination that pins `column` (0-based) to the rightmost slot and
// then takes the smallest usable column for each row above.
// Throws SingularMatrix, or ZeroPivot when m(n-1, column) == 0.
SignedPermutation find_anti_leading_permutation(const RatMatrix& m, std::size_t column);

LUResult lu_decompose(const RatMatrix& m);

// UL factorization of M*Pi for a caller-supplied Pi. Throws ZeroPivot if an
// anti-leading principal minor of M*Pi vanishes.
ULResult ul_decompose(const RatMatrix& m, const SignedPermutation& pi);
ULResult strong_ul_decompose(const RatMatrix& m, std::size_t column);

}  // namespace iwasawa
