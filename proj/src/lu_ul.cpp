#include "iwasawa/lu_ul.hpp"

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void require_square(const RatMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "expected a non-empty square matrix");
}

// Subtracts multiples of `pivot_row` from every row in [begin, end) so that
// column `col` vanishes there.
void eliminate_column(RatMatrix& a, std::size_t pivot_row, std::size_t col, std::size_t begin, std::size_t end) {
  const Rational pivot_inv = a(pivot_row, col).inverse();
  for (std::size_t i = begin; i < end; ++i) {
    if (i == pivot_row || a(i, col).is_zero()) continue;
    const Rational f = a(i, col) * pivot_inv;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(pivot_row, j).is_zero()) a(i, j) -= f * a(pivot_row, j);
  }
}

}  // namespace

SignedPermutation find_leading_permutation(const RatMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> mapping(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t c = 0;
    while (c < n && (used[c] || a(r, c).is_zero())) ++c;
    if (c == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    used[c] = true;
    mapping[r] = c;
    eliminate_column(a, r, c, r + 1, n);
  }
  return SignedPermutation::with_positive_determinant(std::move(mapping));
}

SignedPermutation find_anti_leading_permutation(const RatMatrix& m, std::size_t column) {
  require_square(m);
  const std::size_t n = m.rows();
  if (column >= n) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(column + 1));
  if (m(n - 1, column).is_zero())
    throw Error(ErrorCode::ZeroPivot, "bottom entry of column " + std::to_string(column + 1) + " is zero");
  RatMatrix a = m;
  std::vector<bool> used(n, false);
  std::vector<std::size_t> mapping(n);
  used[column] = true;
  mapping[n - 1] = column;
  eliminate_column(a, n - 1, column, 0, n - 1);
  for (std::size_t r = n - 1; r-- > 0;) {
    std::size_t c = 0;
    while (c < n && (used[c] || a(r, c).is_zero())) ++c;
    if (c == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    used[c] = true;
    mapping[r] = c;
    eliminate_column(a, r, c, 0, r);
  }
  return SignedPermutation::with_positive_determinant(std::move(mapping));
}

LUResult lu_decompose(const RatMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  SignedPermutation p = find_leading_permutation(m);
  RatMatrix a = p.apply_right(m);
  RatMatrix l = RatMatrix::identity(n);
  RatMatrix u = RatMatrix::identity(n);
  RatMatrix d(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = a(k, k);
    if (pivot.is_zero()) throw Error(ErrorCode::SingularMatrix, "vanishing leading principal minor");
    d(k, k) = pivot;
    const Rational inv = pivot.inverse();
    for (std::size_t i = k + 1; i < n; ++i) l(i, k) = a(i, k) * inv;
    for (std::size_t j = k + 1; j < n; ++j) u(k, j) = a(k, j) * inv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l(i, k) * a(k, j);
    }
  }
  return LUResult{std::move(l), std::move(d), std::move(u), std::move(p)};
}

ULResult ul_decompose(const RatMatrix& m, const SignedPermutation& pi) {
  require_square(m);
  const std::size_t n = m.rows();
  RatMatrix a = pi.apply_right(m);
  RatMatrix v = RatMatrix::identity(n);
  RatMatrix lambda = RatMatrix::identity(n);
  RatMatrix delta(n, n);
  // Peel off the bottom-right pivot and update the leading Schur complement.
  for (std::size_t k = n; k-- > 0;) {
    const Rational pivot = a(k, k);
    if (pivot.is_zero())
      throw Error(ErrorCode::ZeroPivot, "vanishing anti-leading principal minor of order " + std::to_string(n - k));
    delta(k, k) = pivot;
    const Rational inv = pivot.inverse();
    for (std::size_t i = 0; i < k; ++i) v(i, k) = a(i, k) * inv;
    for (std::size_t j = 0; j < k; ++j) lambda(k, j) = a(k, j) * inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) a(i, j) -= v(i, k) * a(k, j);
    }
  }
  // eta_{n-1} = 1 / Delta_nn and eta_{p-1} = eta_p / Delta_pp.
  std::vector<Rational> etas(n > 0 ? n - 1 : 0);
  Rational eta = 1;
  for (std::size_t p = n; p-- > 1;) {
    eta /= delta(p, p);
    etas[p - 1] = eta;
  }
  return ULResult{std::move(v), std::move(delta), std::move(lambda), pi, std::move(etas)};
}

ULResult strong_ul_decompose(const RatMatrix& m, std::size_t column) {
  return ul_decompose(m, find_anti_leading_permutation(m, column));
}

}  // namespace iwasawa
