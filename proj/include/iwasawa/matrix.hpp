#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "iwasawa/rational.hpp"

namespace iwasawa {

// Dense row-major matrix of exact rationals. Indices are 0-based throughout the
// C++ API; serialized forms (JSON, CLI) are 1-based.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  // Bounds-checked access; throws IndexOutOfRange.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;
  std::vector<Rational> diagonal_entries() const;

  RatMatrix transpose() const;
  // Top-left block of the given size.
  RatMatrix leading_block(std::size_t n) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

bool is_unit_upper_triangular(const RatMatrix& m);
bool is_unit_lower_triangular(const RatMatrix& m);
bool is_diagonal(const RatMatrix& m);

// Fraction-free (Bareiss) determinant after clearing row denominators.
Rational determinant(const RatMatrix& m);
// Gauss-Jordan inverse; throws SingularMatrix.
RatMatrix inverse(const RatMatrix& m);

// Determinant of the submatrix picking `rows` and `cols` in the given order.
// Repeated indices are allowed (the minor is then zero); the empty minor is 1.
Rational minor(const RatMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
Rational minor(const RatMatrix& m, std::initializer_list<std::size_t> rows,
               std::initializer_list<std::size_t> cols);

// Strictly increasing column positions (0-based).
struct IndexSubset {
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  bool contains(std::size_t i) const;
  std::vector<std::size_t> one_based() const;
  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSubset> lex_subsets(std::size_t n, std::size_t k);

struct MinorEntry {
  IndexSubset columns;
  Rational value;
};

// All C(n,k) minors on the last k rows, column subsets in lexicographic order.
// Shares Laplace subresults across subsets.
std::vector<MinorEntry> anti_leading_minors(const RatMatrix& m, std::size_t k);

// anti_leading_minors for every order 1..n-1 (index 0 holds order 1), computed
// in one sweep over column subsets.
std::vector<std::vector<MinorEntry>> anti_leading_minor_table(const RatMatrix& m);

// det of the Gram matrix (<a_i, b_j>); the epsilon product of the two lists.
Rational epsilon_product(std::span<const std::vector<Rational>> a, std::span<const std::vector<Rational>> b);

// Column permutation matrix, optionally with its first column negated so the
// determinant is +1. Column j of M*P is column mapping[j] of M (negated for
// j = 0 when negate_first is set).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  // Throws DimensionMismatch if mapping is not a bijection.
  SignedPermutation(std::vector<std::size_t> mapping, bool negate_first);

  static SignedPermutation identity(std::size_t n);
  // Sets negate_first exactly when the permutation is odd.
  static SignedPermutation with_positive_determinant(std::vector<std::size_t> mapping);

  std::size_t size() const { return mapping_.size(); }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  bool negate_first() const { return negate_first_; }
  bool is_odd() const;
  int determinant() const;

  RatMatrix matrix() const;
  RatMatrix inverse_matrix() const;
  // M * P without forming P.
  RatMatrix apply_right(const RatMatrix& m) const;

 private:
  std::vector<std::size_t> mapping_;
  bool negate_first_ = false;
};

}  // namespace iwasawa
