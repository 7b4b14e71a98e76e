#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/matrix.hpp"

namespace iwasawa {

// Exact checkers for the minor identities behind the p-adic dilaton formula and
// the real closed forms. All row/column indices are 0-based.

enum class IdentityKind { Lemma1, SpecialLemma1, Lemma2, Telescope, TelescopeQuotient };
inline constexpr std::size_t kIdentityKinds = 5;

std::string_view to_string(IdentityKind kind);

struct IdentityReport {
  IdentityKind identity;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

// M(r; c) M(r_2..r_k; d) = sum_a (-1)^(a+1) M(r; c_a, d) M(r_2..r_k; c without c_a)
// with |r| = |c| = k and |d| = k - 1.
IdentityReport lemma1_check(const RatMatrix& m, std::span<const std::size_t> r, std::span<const std::size_t> c,
                            std::span<const std::size_t> d);

// The lemma1 identity with an extra shared index r_{k+1} appended to the rows and columns:
// |r| = k + 1, |c| = k.
IdentityReport speciallemma1_check(const RatMatrix& m, std::span<const std::size_t> r,
                                   std::span<const std::size_t> c);

// det[ M(r_i..r_{k+1}; c_j, r_{i+1}..r_{k+1}) ]_{i,j=1..k}
//   = M(r_1..r_{k+1}; c_1..c_k, r_{k+1}) * prod_{i=2..k} M(r_i..r_{k+1}; r_i..r_{k+1})
// with |r| = k + 1, |c| = k.
IdentityReport lemma2_check(const RatMatrix& m, std::span<const std::size_t> r, std::span<const std::size_t> c);

// Divisionless telescope step on the rows V of M, S = (r..n-1), S' = (r+1..n-1):
//   eps(mu,S; nu,S) eps(S';S') = eps(mu,S'; nu,S') eps(S;S) - eps(mu,S'; S) eps(nu,S'; S)
// Requires mu < nu <= r < n.
IdentityReport telescope_check(const RatMatrix& m, std::size_t mu, std::size_t nu, std::size_t r);

// The quotient form of the same step, written with the closed-form axions and
// dilatons. Empty when a denominator vanishes.
std::optional<IdentityReport> telescope_quotient_check(const RatMatrix& m, std::size_t mu, std::size_t nu,
                                                       std::size_t r);

struct IdentitySuiteConfig {
  std::vector<std::size_t> sizes{2, 3, 4, 5, 6};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Sizes above this sample random index tuples instead of enumerating them.
  std::size_t enumerate_up_to = 4;
  std::size_t tuple_cap = 200;
};

struct IdentityTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
};

struct IdentitySuiteReport {
  IdentitySuiteConfig config;
  std::array<IdentityTally, kIdentityKinds> tallies{};
  std::vector<std::string> failures;  // first few, human readable

  IdentityTally& tally(IdentityKind kind) { return tallies[static_cast<std::size_t>(kind)]; }
  const IdentityTally& tally(IdentityKind kind) const { return tallies[static_cast<std::size_t>(kind)]; }
  bool all_pass() const;
};

// Random rational matrices per size; every identity checked on every matrix.
IdentitySuiteReport run_identity_suite(const IdentitySuiteConfig& config);

}  // namespace iwasawa
