#pragma once

#include <cstddef>
#include <vector>

#include "iwasawa/matrix.hpp"
#include "iwasawa/report.hpp"

namespace iwasawa {

// Dense row-major binary64 matrix; only used on the floating side of the real
// decomposition.
struct FloatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  FloatMatrix() = default;
  FloatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct AxionsDilatons {
  RatMatrix N;                              // unit upper; x_{mu nu} above the diagonal
  std::vector<Rational> dilatons_squared;   // y_1^2 .. y_{n-1}^2
};

struct RealResiduals {
  double reconstruction = 0;  // max |N A K - M|
  double matrix_scale = 0;    // max |M|
  double orthogonality = 0;   // max |K K^T - I|
};

// M = N A K over R with K in SO(n). N and the squared dilatons are exact; A and
// K carry the square roots and are binary64.
struct RealIwasawa {
  RatMatrix M;
  RatMatrix N;
  std::vector<Rational> dilatons_squared;
  std::vector<double> a_diagonal;
  FloatMatrix K;
  RealResiduals residuals;
};

inline constexpr double kRealTolerance = 1e-9;

// y_mu^-2 = det Gram(V_{mu+1..n}) and
// x_{mu nu} = y_{nu-1}^2 * eps(V_mu, V_{nu+1..n}; V_nu, V_{nu+1..n}),
// with V_i the rows of M. Throws NotSpecialLinear / SingularMatrix.
AxionsDilatons real_axions_dilatons(const RatMatrix& m);

// Residuals of a floating realization, evaluated in exact arithmetic on the
// binary64 values.
RealResiduals real_residuals(const RatMatrix& m, const RatMatrix& n, const std::vector<double>& a_diagonal,
                             const FloatMatrix& k);

// Throws PrecisionLoss when the residuals exceed `tolerance` (reconstruction
// relative to max |M|, orthogonality absolute).
RealIwasawa real_decompose(const RatMatrix& m, double tolerance = kRealTolerance);

// Re-derives N and y^2 from M and re-measures the residuals.
VerificationReport verify_real(const RealIwasawa& dec, double tolerance = kRealTolerance);

}  // namespace iwasawa
