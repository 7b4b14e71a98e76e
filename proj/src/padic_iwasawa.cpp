#include "iwasawa/padic_iwasawa.hpp"

#include "iwasawa/error.hpp"
#include "iwasawa/lu_ul.hpp"

namespace iwasawa {

namespace {

struct NakParts {
  RatMatrix N;
  RatMatrix A;
  RatMatrix K;
};

// diag(block, 1)
RatMatrix pad_with_one(const RatMatrix& block) {
  const std::size_t n = block.rows() + 1;
  RatMatrix out = RatMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) out(i, j) = block(i, j);
  return out;
}

// Works for any nonsingular matrix. Each level performs a strong UL
// decomposition pivoting on the bottom-row entry of largest norm, splits the
// bottom row of Lambda off as an integral unit lower factor R, and recurses on
// the remaining (n-1)x(n-1) unit lower block of Lambda:
//
//   M = V Delta diag(Lambda1, 1) R Pi^-1,   Lambda1 = N1 A1 K1
//     = [V diag(D1 N1 D1^-1, 1)] [Delta diag(A1, 1)] [diag(K1, 1) R Pi^-1]
//
// with D1 the leading block of Delta.
NakParts decompose_block(const RatMatrix& m, Prime p) {
  const std::size_t n = m.rows();
  if (n == 1) return NakParts{RatMatrix::identity(1), m, RatMatrix::identity(1)};

  const std::size_t pivot = max_norm_column(m, p);
  ULResult ul = strong_ul_decompose(m, pivot);

  RatMatrix bottom = RatMatrix::identity(n);
  for (std::size_t j = 0; j + 1 < n; ++j) bottom(n - 1, j) = ul.Lambda(n - 1, j);

  NakParts inner = decompose_block(ul.Lambda.leading_block(n - 1), p);

  RatMatrix d1 = ul.Delta.leading_block(n - 1);
  RatMatrix d1_inv(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d1_inv(i, i) = d1(i, i).inverse();

  NakParts out;
  out.N = ul.V * pad_with_one(d1 * inner.N * d1_inv);
  out.A = ul.Delta * pad_with_one(inner.A);
  out.K = pad_with_one(inner.K) * bottom * ul.Pi.inverse_matrix();
  return out;
}

std::vector<Valuation> valuations_of(const std::vector<Rational>& values, Prime p) {
  std::vector<Valuation> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(padic_valuation(v, p));
  return out;
}

std::vector<Valuation> min_formula(const RatMatrix& m, Prime p, const std::size_t* required_column) {
  require_special_linear(m);
  const std::size_t n = m.rows();
  std::vector<Valuation> out(n - 1, Valuation::infinity());
  auto table = anti_leading_minor_table(m);
  for (std::size_t k = 1; k < n; ++k) {
    Valuation best = Valuation::infinity();
    for (const auto& entry : table[k - 1]) {
      if (required_column && !entry.columns.contains(*required_column)) continue;
      best = std::min(best, padic_valuation(entry.value, p));
    }
    if (best.is_infinite()) throw Error(ErrorCode::SingularMatrix, "all anti-leading minors of order " + std::to_string(k) + " vanish");
    out[n - k - 1] = -best;
  }
  return out;
}

bool all_integral(const RatMatrix& m, Prime p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (padic_valuation(m(i, j), p) < Valuation::finite(0)) return false;
  return true;
}

}  // namespace

void require_special_linear(const RatMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "expected a non-empty square matrix");
  Rational det = determinant(m);
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  if (det != Rational(1)) throw Error(ErrorCode::NotSpecialLinear, "determinant is " + det.to_string() + ", not 1");
}

std::vector<Rational> dilatons_from_torus(const RatMatrix& a) {
  std::vector<Rational> out;
  Rational y = 1;
  for (std::size_t i = 0; i + 1 < a.rows(); ++i) {
    y *= a(i, i);
    out.push_back(y);
  }
  return out;
}

std::size_t max_norm_column(const RatMatrix& m, Prime p) {
  const std::size_t last = m.rows() - 1;
  std::size_t best = m.cols();
  Valuation best_v = Valuation::infinity();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Valuation v = padic_valuation(m(last, j), p);
    if (!v.is_infinite() && (best == m.cols() || v < best_v)) {
      best = j;
      best_v = v;
    }
  }
  if (best == m.cols()) throw Error(ErrorCode::SingularMatrix, "bottom row is zero");
  return best;
}

PadicIwasawa decompose_padic(const RatMatrix& m, Prime p) {
  require_special_linear(m);
  NakParts parts = decompose_block(m, p);
  PadicIwasawa dec;
  dec.prime = p;
  dec.M = m;
  dec.N = std::move(parts.N);
  dec.A = std::move(parts.A);
  dec.K = std::move(parts.K);
  dec.dilatons = dilatons_from_torus(dec.A);
  dec.dilaton_valuations = valuations_of(dec.dilatons, p);
  return dec;
}

std::vector<Valuation> dilaton_valuations(const RatMatrix& m, Prime p) { return min_formula(m, p, nullptr); }

std::vector<Valuation> dilaton_valuations_through_column(const RatMatrix& m, Prime p, std::size_t column) {
  if (column >= m.cols()) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(column + 1));
  return min_formula(m, p, &column);
}

void validate_family_params(const FamilyParams& params, std::size_t n, Prime p) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidFamilyParams, why); };
  if (params.X.rows() != n || params.X.cols() != n) fail("X must be " + std::to_string(n) + "x" + std::to_string(n));
  if (params.Y.rows() != n || params.Y.cols() != n) fail("Y must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!is_unit_upper_triangular(params.X)) fail("X is not unit upper triangular");
  if (!all_integral(params.X, p)) fail("X has an entry outside Z_" + std::to_string(p.value()));
  if (!is_diagonal(params.Y)) fail("Y is not diagonal");
  for (std::size_t i = 0; i < n; ++i)
    if (padic_valuation(params.Y(i, i), p) != Valuation::finite(0))
      fail("Y has a diagonal entry that is not a " + std::to_string(p.value()) + "-adic unit");
  if (determinant(params.Y) != Rational(1)) fail("det Y is not 1");
}

PadicIwasawa apply_family(const PadicIwasawa& dec, const FamilyParams& params, Prime p) {
  if (!(dec.prime == p))
    throw Error(ErrorCode::InvalidFamilyParams, "decomposition is at p = " + std::to_string(dec.prime.value()));
  validate_family_params(params, dec.A.rows(), p);
  const std::size_t n = dec.A.rows();
  RatMatrix a_inv(n, n);
  for (std::size_t i = 0; i < n; ++i) a_inv(i, i) = dec.A(i, i).inverse();

  PadicIwasawa out;
  out.prime = p;
  out.M = dec.M;
  out.N = dec.N * dec.A * params.X * a_inv;
  out.A = dec.A * params.Y;
  out.K = inverse(params.X * params.Y) * dec.K;
  out.dilatons = dilatons_from_torus(out.A);
  out.dilaton_valuations = valuations_of(out.dilatons, p);
  return out;
}

VerificationReport verify_membership(const PadicIwasawa& dec, Prime p) {
  VerificationReport report;
  const std::size_t n = dec.M.rows();
  auto shaped = [n](const RatMatrix& x) { return x.rows() == n && x.cols() == n && n > 0; };
  const bool shapes_ok = dec.M.is_square() && shaped(dec.N) && shaped(dec.A) && shaped(dec.K);
  report.add("shapes", shapes_ok, shapes_ok ? "" : "N, A, K and M must share one square size");

  report.add("N_unit_upper_triangular", is_unit_upper_triangular(dec.N));
  const bool diag = is_diagonal(dec.A);
  report.add("A_diagonal", diag);
  bool det_a = false;
  if (dec.A.is_square() && dec.A.rows() > 0) det_a = determinant(dec.A) == Rational(1);
  report.add("A_det_one", det_a);
  report.add("K_integral", all_integral(dec.K, p),
             "every entry of K must have " + std::to_string(p.value()) + "-adic valuation >= 0");
  bool det_k = false;
  if (dec.K.is_square() && dec.K.rows() > 0) det_k = determinant(dec.K) == Rational(1);
  report.add("K_det_one", det_k);

  bool reconstructs = false;
  if (shapes_ok) reconstructs = dec.N * dec.A * dec.K == dec.M;
  report.add("reconstruction", reconstructs, "N*A*K must equal M exactly");

  bool dilatons_ok = false;
  if (diag && shapes_ok) {
    auto ys = dilatons_from_torus(dec.A);
    dilatons_ok = (dec.dilatons.empty() || dec.dilatons == ys) &&
                  (dec.dilaton_valuations.empty() || dec.dilaton_valuations == valuations_of(ys, p));
  }
  report.add("dilatons_consistent", dilatons_ok, "recorded dilatons must match the torus A");
  return report;
}

}  // namespace iwasawa
