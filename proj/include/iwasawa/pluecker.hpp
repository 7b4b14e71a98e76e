#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iwasawa/matrix.hpp"

namespace iwasawa {

// p_k(M): all order-k anti-leading minors, column subsets in lexicographic order.
struct PlueckerVector {
  std::size_t order = 0;
  std::vector<MinorEntry> components;

  std::vector<Rational> values() const;
};

// Exact encoding of a place norm. At a finite place p, `valuation` is the
// smallest component valuation, so ||v||_p = p^-valuation. At the real place,
// `squared` is ||v||^2. The unused field stays at its default.
struct PlaceNorm {
  Place place = Place::infinite();
  Valuation valuation = Valuation::infinity();
  Rational squared;
};

// Dilaton y_k at one place: v_p(y_k) at a finite place, y_k^2 at the real one.
struct DilatonNorm {
  Place place = Place::infinite();
  std::size_t k = 0;
  Valuation valuation = Valuation::infinity();
  Rational y_squared;

  // |y_k|_p for finite p, y_k^2 at the real place; exact either way.
  Rational exact_value() const;
};

// 1 <= k <= n-1; throws IndexOutOfRange.
PlueckerVector pluecker(const RatMatrix& m, std::size_t k);

// Throws ZeroVector.
PlaceNorm place_norm(std::span<const Rational> v, const Place& place);
PlaceNorm place_norm(const PlueckerVector& v, const Place& place);

// |y_k|_place = ||p_{n-k}(M)||_place^-1. Throws NotSpecialLinear / SingularMatrix.
DilatonNorm dilaton_norm_unified(const RatMatrix& m, std::size_t k, const Place& place);

// All k = 1..n-1 at every listed place; row k-1, column in place order.
std::vector<std::vector<DilatonNorm>> dilaton_norm_table(const RatMatrix& m, std::span<const Place> places);

}  // namespace iwasawa
