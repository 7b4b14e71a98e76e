#pragma once

#include <cstddef>
#include <vector>

#include "iwasawa/matrix.hpp"
#include "iwasawa/rational.hpp"
#include "iwasawa/report.hpp"

namespace iwasawa {

// M = N * A * K over Q_p: N unit upper triangular (axions above the diagonal),
// A diagonal with det 1, K in SL(n, Z_p). dilatons[k-1] = y_k is the product of
// the first k diagonal entries of A.
struct PadicIwasawa {
  Prime prime{2};
  RatMatrix M;
  RatMatrix N;
  RatMatrix A;
  RatMatrix K;
  std::vector<Rational> dilatons;
  std::vector<Valuation> dilaton_valuations;
};

// Reparameterization of a decomposition: X unit upper triangular over Z_p,
// Y diagonal over Z_p^x with det 1.
struct FamilyParams {
  RatMatrix X;
  RatMatrix Y;
};

// Throws SingularMatrix if det M = 0 and NotSpecialLinear if det M != 1.
void require_special_linear(const RatMatrix& m);

// y_1..y_{n-1} read off a diagonal torus.
std::vector<Rational> dilatons_from_torus(const RatMatrix& a);

// Recursive strong-UL construction. Throws NotSpecialLinear / SingularMatrix.
PadicIwasawa decompose_padic(const RatMatrix& m, Prime p);

// Closed form: v_p(y_{n-k}) = -min over column subsets of v_p of the order-k
// anti-leading minor. Entry k-1 of the result is v_p(y_k).
std::vector<Valuation> dilaton_valuations(const RatMatrix& m, Prime p);

// Same formula with the minimum restricted to column subsets containing
// `column` (0-based). Agrees with dilaton_valuations when `column` holds a
// bottom-row entry of largest p-adic norm.
std::vector<Valuation> dilaton_valuations_through_column(const RatMatrix& m, Prime p, std::size_t column);

// Bottom-row column of largest p-adic norm, smallest index on ties.
std::size_t max_norm_column(const RatMatrix& m, Prime p);

// Throws InvalidFamilyParams.
void validate_family_params(const FamilyParams& params, std::size_t n, Prime p);

// (N A X A^-1, A Y, (X Y)^-1 K).
PadicIwasawa apply_family(const PadicIwasawa& dec, const FamilyParams& params, Prime p);

// Never throws on malformed decompositions; failures are reported per check.
VerificationReport verify_membership(const PadicIwasawa& dec, Prime p);

}  // namespace iwasawa
