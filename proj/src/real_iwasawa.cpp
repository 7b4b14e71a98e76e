#include "iwasawa/real_iwasawa.hpp"

#include <cmath>
#include <numeric>

#include "iwasawa/error.hpp"
#include "iwasawa/padic_iwasawa.hpp"

namespace iwasawa {

namespace {

// Indices mu, from, from+1, ..., n-1.
std::vector<std::size_t> head_then_tail(std::size_t head, std::size_t from, std::size_t n) {
  std::vector<std::size_t> out{head};
  for (std::size_t i = from; i < n; ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> tail(std::size_t from, std::size_t n) {
  std::vector<std::size_t> out(n - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

double max_abs(const RatMatrix& m) {
  Rational best;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m(i, j).abs());
  return best.to_double();
}

}  // namespace

AxionsDilatons real_axions_dilatons(const RatMatrix& m) {
  require_special_linear(m);
  const std::size_t n = m.rows();
  // eps(V_I; V_J) is the (I, J) minor of the Gram matrix M M^T.
  const RatMatrix gram = m * m.transpose();

  AxionsDilatons out;
  out.dilatons_squared.resize(n - 1);
  for (std::size_t mu = 1; mu < n; ++mu) {
    // 0-based: y_mu^-2 uses rows mu..n-1
    auto rows = tail(mu, n);
    out.dilatons_squared[mu - 1] = minor(gram, rows, rows).inverse();
  }
  out.N = RatMatrix::identity(n);
  for (std::size_t nu = 1; nu < n; ++nu) {
    const Rational& y_sq = out.dilatons_squared[nu - 1];
    const auto right = head_then_tail(nu, nu + 1, n);
    for (std::size_t mu = 0; mu < nu; ++mu) {
      const auto left = head_then_tail(mu, nu + 1, n);
      out.N(mu, nu) = y_sq * minor(gram, left, right);
    }
  }
  return out;
}

RealResiduals real_residuals(const RatMatrix& m, const RatMatrix& n, const std::vector<double>& a_diagonal,
                             const FloatMatrix& k) {
  const std::size_t size = m.rows();
  RatMatrix ak(size, size);
  RatMatrix k_exact(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const Rational a = Rational::from_double(a_diagonal[i]);
    for (std::size_t j = 0; j < size; ++j) {
      k_exact(i, j) = Rational::from_double(k(i, j));
      ak(i, j) = a * k_exact(i, j);
    }
  }
  RealResiduals r;
  r.reconstruction = max_abs(n * ak - m);
  r.matrix_scale = max_abs(m);
  r.orthogonality = max_abs(k_exact * k_exact.transpose() - RatMatrix::identity(size));
  return r;
}

RealIwasawa real_decompose(const RatMatrix& m, double tolerance) {
  AxionsDilatons exact = real_axions_dilatons(m);
  const std::size_t n = m.rows();

  RealIwasawa out;
  out.M = m;
  out.N = exact.N;
  out.dilatons_squared = exact.dilatons_squared;

  // A_ii^2 = y_i^2 / y_{i-1}^2 with y_0 = y_n = 1.
  out.a_diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational upper = i + 1 < n ? exact.dilatons_squared[i] : Rational(1);
    Rational lower = i > 0 ? exact.dilatons_squared[i - 1] : Rational(1);
    out.a_diagonal[i] = std::sqrt((upper / lower).to_double());
  }

  // K = A^-1 (N^-1 M); N^-1 M is exact, the division by A is the only rounding.
  const RatMatrix q = inverse(exact.N) * m;
  out.K = FloatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.K(i, j) = q(i, j).to_double() / out.a_diagonal[i];

  out.residuals = real_residuals(m, out.N, out.a_diagonal, out.K);
  if (out.residuals.reconstruction > tolerance * out.residuals.matrix_scale ||
      out.residuals.orthogonality > tolerance)
    throw Error(ErrorCode::PrecisionLoss,
                "residual " + std::to_string(out.residuals.reconstruction) + ", orthogonality defect " +
                    std::to_string(out.residuals.orthogonality));
  return out;
}

VerificationReport verify_real(const RealIwasawa& dec, double tolerance) {
  VerificationReport report;
  const std::size_t n = dec.M.rows();
  const bool shapes_ok = n > 0 && dec.M.is_square() && dec.N.rows() == n && dec.N.cols() == n &&
                         dec.a_diagonal.size() == n && dec.K.rows == n && dec.K.cols == n &&
                         dec.dilatons_squared.size() == n - 1;
  report.add("shapes", shapes_ok);
  report.add("N_unit_upper_triangular", is_unit_upper_triangular(dec.N));
  bool positive = true;
  for (const auto& y : dec.dilatons_squared) positive = positive && y.sign() > 0;
  report.add("dilatons_squared_positive", positive);

  bool exact_ok = false;
  std::string detail;
  try {
    AxionsDilatons expected = real_axions_dilatons(dec.M);
    exact_ok = expected.N == dec.N && expected.dilatons_squared == dec.dilatons_squared;
  } catch (const Error& e) {
    detail = e.what();
  }
  report.add("closed_forms", exact_ok, detail.empty() ? "N and y^2 must equal the closed forms of M" : detail);

  bool a_ok = shapes_ok;
  if (shapes_ok) {
    for (std::size_t i = 0; i < n; ++i) {
      double upper = i + 1 < n ? dec.dilatons_squared[i].to_double() : 1.0;
      double lower = i > 0 ? dec.dilatons_squared[i - 1].to_double() : 1.0;
      double expected = std::sqrt(upper / lower);
      a_ok = a_ok && dec.a_diagonal[i] > 0 && std::abs(dec.a_diagonal[i] - expected) <= tolerance * expected;
    }
  }
  report.add("A_matches_dilatons", a_ok);

  RealResiduals r;
  if (shapes_ok) r = real_residuals(dec.M, dec.N, dec.a_diagonal, dec.K);
  report.add("reconstruction", shapes_ok && r.reconstruction <= tolerance * r.matrix_scale,
             "max |NAK - M| = " + std::to_string(r.reconstruction));
  report.add("K_orthogonal", shapes_ok && r.orthogonality <= tolerance,
             "max |KK^T - I| = " + std::to_string(r.orthogonality));
  return report;
}

}  // namespace iwasawa
