#include "iwasawa/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

// Bareiss elimination on an integer matrix, in place. Returns the determinant.
mpz_class bareiss(std::vector<mpz_class>& a, std::size_t n) {
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& x = a[i * n + j];
        x = x * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[n * n - 1];
}

// Clears denominators row by row, then runs Bareiss on the selected block.
Rational select_determinant(const RatMatrix& m, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return Rational(1);
  std::vector<mpz_class> ints(k * k);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < k; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(rows[i], cols[j]).mpq().get_den_mpz_t());
    for (std::size_t j = 0; j < k; ++j) {
      const mpq_class& q = m(rows[i], cols[j]).mpq();
      ints[i * k + j] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return Rational(bareiss(ints, k), scale);
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

const Rational& RatMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw Error(ErrorCode::IndexOutOfRange,
                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") outside " +
                    std::to_string(rows_) + "x" + std::to_string(cols_));
  return (*this)(i, j);
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RatMatrix::column(std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<Rational> RatMatrix::diagonal_entries() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::leading_block(std::size_t n) const {
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = (*this)(i, j);
  return b;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b);
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b);
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_unit_upper_triangular(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool is_unit_lower_triangular(const RatMatrix& m) { return is_unit_upper_triangular(m.transpose()); }

bool is_diagonal(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return select_determinant(m, idx, idx);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    Rational scale = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rational minor(const RatMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size())
    throw Error(ErrorCode::IndexOutOfRange, "minor needs as many rows as columns");
  if (rows.size() > std::min(m.rows(), m.cols()))
    throw Error(ErrorCode::IndexOutOfRange, "minor order exceeds matrix size");
  for (auto r : rows)
    if (r >= m.rows()) throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(r + 1));
  for (auto c : cols)
    if (c >= m.cols()) throw Error(ErrorCode::IndexOutOfRange, "column index " + std::to_string(c + 1));
  return select_determinant(m, rows, cols);
}

Rational minor(const RatMatrix& m, std::initializer_list<std::size_t> rows,
               std::initializer_list<std::size_t> cols) {
  return minor(m, std::span<const std::size_t>(rows.begin(), rows.size()),
               std::span<const std::size_t>(cols.begin(), cols.size()));
}

bool IndexSubset::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::vector<std::size_t> IndexSubset::one_based() const {
  std::vector<std::size_t> out = indices;
  for (auto& i : out) ++i;
  return out;
}

std::vector<IndexSubset> lex_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSubset> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(IndexSubset{cur});
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

constexpr std::size_t kMaxMemoColumns = 22;

// Fills memo[mask] with the minor on the last popcount(mask) rows and the
// columns in mask, for every mask of popcount <= max_order. Each order-j value
// is the Laplace expansion along row n-j over order-(j-1) values.
std::vector<Rational> laplace_sweep(const RatMatrix& m, std::size_t max_order) {
  const std::size_t n = m.cols();
  std::vector<Rational> memo(std::size_t{1} << n);
  memo[0] = 1;
  for (std::size_t j = 1; j <= max_order; ++j) {
    const std::size_t row = m.rows() - j;
    for (const auto& subset : lex_subsets(n, j)) {
      std::uint32_t mask = 0;
      for (auto c : subset.indices) mask |= std::uint32_t{1} << c;
      Rational acc;
      for (std::size_t t = 0; t < j; ++t) {
        const std::size_t c = subset.indices[t];
        const Rational& lead = m(row, c);
        if (lead.is_zero()) continue;
        const Rational& rest = memo[mask & ~(std::uint32_t{1} << c)];
        if (rest.is_zero()) continue;
        if (t % 2 == 0)
          acc += lead * rest;
        else
          acc -= lead * rest;
      }
      memo[mask] = std::move(acc);
    }
  }
  return memo;
}

std::vector<MinorEntry> collect(const RatMatrix& m, const std::vector<Rational>* memo, std::size_t k) {
  std::vector<MinorEntry> out;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = m.rows() - k + i;
  for (auto& subset : lex_subsets(m.cols(), k)) {
    Rational value;
    if (memo) {
      std::uint32_t mask = 0;
      for (auto c : subset.indices) mask |= std::uint32_t{1} << c;
      value = (*memo)[mask];
    } else {
      value = select_determinant(m, rows, subset.indices);
    }
    out.push_back(MinorEntry{std::move(subset), std::move(value)});
  }
  return out;
}

void check_order(const RatMatrix& m, std::size_t k) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "anti-leading minors need a square matrix");
  if (k < 1 || k > m.rows())
    throw Error(ErrorCode::IndexOutOfRange, "order " + std::to_string(k) + " outside 1.." + std::to_string(m.rows()));
}

}  // namespace

std::vector<MinorEntry> anti_leading_minors(const RatMatrix& m, std::size_t k) {
  check_order(m, k);
  if (m.cols() > kMaxMemoColumns) return collect(m, nullptr, k);
  auto memo = laplace_sweep(m, k);
  return collect(m, &memo, k);
}

std::vector<std::vector<MinorEntry>> anti_leading_minor_table(const RatMatrix& m) {
  std::vector<std::vector<MinorEntry>> table;
  if (m.rows() < 2) {
    check_order(m, 1);
    return table;
  }
  check_order(m, m.rows() - 1);
  const bool memoize = m.cols() <= kMaxMemoColumns;
  std::vector<Rational> memo;
  if (memoize) memo = laplace_sweep(m, m.rows() - 1);
  for (std::size_t k = 1; k < m.rows(); ++k) table.push_back(collect(m, memoize ? &memo : nullptr, k));
  return table;
}

Rational epsilon_product(std::span<const std::vector<Rational>> a, std::span<const std::vector<Rational>> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "epsilon product needs equal list lengths");
  const std::size_t m = a.size();
  if (m == 0) return Rational(1);
  const std::size_t dim = a[0].size();
  for (const auto* list : {&a, &b})
    for (const auto& v : *list)
      if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "epsilon product vectors differ in dimension");
  if (m > dim) throw Error(ErrorCode::DimensionMismatch, "more vectors than dimensions");
  RatMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational dot;
      for (std::size_t t = 0; t < dim; ++t) dot += a[i][t] * b[j][t];
      gram(i, j) = std::move(dot);
    }
  return determinant(gram);
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> mapping, bool negate_first)
    : mapping_(std::move(mapping)), negate_first_(negate_first) {
  std::vector<bool> seen(mapping_.size(), false);
  for (auto v : mapping_) {
    if (v >= mapping_.size() || seen[v]) throw Error(ErrorCode::DimensionMismatch, "mapping is not a bijection");
    seen[v] = true;
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return SignedPermutation(std::move(map), false);
}

SignedPermutation SignedPermutation::with_positive_determinant(std::vector<std::size_t> mapping) {
  SignedPermutation p(std::move(mapping), false);
  p.negate_first_ = p.is_odd();
  return p;
}

bool SignedPermutation::is_odd() const {
  std::vector<bool> visited(mapping_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = mapping_[j]) {
      visited[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

int SignedPermutation::determinant() const { return (is_odd() ? -1 : 1) * (negate_first_ ? -1 : 1); }

RatMatrix SignedPermutation::matrix() const {
  RatMatrix p(size(), size());
  for (std::size_t j = 0; j < size(); ++j) p(mapping_[j], j) = (j == 0 && negate_first_) ? -1 : 1;
  return p;
}

RatMatrix SignedPermutation::inverse_matrix() const { return matrix().transpose(); }

RatMatrix SignedPermutation::apply_right(const RatMatrix& m) const {
  if (m.cols() != size()) throw Error(ErrorCode::DimensionMismatch, "permutation size differs from column count");
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      out(i, j) = m(i, mapping_[j]);
      if (j == 0 && negate_first_) out(i, j) = -out(i, j);
    }
  return out;
}

}  // namespace iwasawa
