#include "iwasawa/pluecker.hpp"

#include "iwasawa/error.hpp"
#include "iwasawa/padic_iwasawa.hpp"

namespace iwasawa {

namespace {

DilatonNorm from_minors(std::span<const MinorEntry> minors, std::size_t k, const Place& place) {
  std::vector<Rational> values;
  values.reserve(minors.size());
  for (const auto& e : minors) values.push_back(e.value);
  PlaceNorm norm = place_norm(values, place);
  DilatonNorm out;
  out.place = place;
  out.k = k;
  if (place.is_finite())
    out.valuation = -norm.valuation;
  else
    out.y_squared = norm.squared.inverse();
  return out;
}

}  // namespace

std::vector<Rational> PlueckerVector::values() const {
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.value);
  return out;
}

Rational DilatonNorm::exact_value() const {
  if (place.is_finite()) return padic_norm(valuation, place.prime());
  return y_squared;
}

PlueckerVector pluecker(const RatMatrix& m, std::size_t k) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "Pluecker coordinates need a square matrix");
  if (k < 1 || k + 1 > m.rows())
    throw Error(ErrorCode::IndexOutOfRange,
                "order " + std::to_string(k) + " outside 1.." + std::to_string(m.rows() > 0 ? m.rows() - 1 : 0));
  return PlueckerVector{k, anti_leading_minors(m, k)};
}

PlaceNorm place_norm(std::span<const Rational> v, const Place& place) {
  PlaceNorm out;
  out.place = place;
  bool nonzero = false;
  if (place.is_finite()) {
    const Prime p = place.prime();
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      nonzero = true;
      out.valuation = std::min(out.valuation, padic_valuation(x, p));
    }
  } else {
    for (const auto& x : v) {
      nonzero = nonzero || !x.is_zero();
      out.squared += x * x;
    }
  }
  if (!nonzero) throw Error(ErrorCode::ZeroVector, "norm of the zero vector");
  return out;
}

PlaceNorm place_norm(const PlueckerVector& v, const Place& place) {
  auto values = v.values();
  return place_norm(values, place);
}

DilatonNorm dilaton_norm_unified(const RatMatrix& m, std::size_t k, const Place& place) {
  require_special_linear(m);
  const std::size_t n = m.rows();
  if (k < 1 || k >= n)
    throw Error(ErrorCode::IndexOutOfRange, "dilaton index " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  auto minors = anti_leading_minors(m, n - k);
  return from_minors(minors, k, place);
}

std::vector<std::vector<DilatonNorm>> dilaton_norm_table(const RatMatrix& m, std::span<const Place> places) {
  require_special_linear(m);
  const std::size_t n = m.rows();
  auto minors = anti_leading_minor_table(m);
  std::vector<std::vector<DilatonNorm>> rows;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<DilatonNorm> row;
    for (const auto& place : places) row.push_back(from_minors(minors[n - k - 1], k, place));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace iwasawa
