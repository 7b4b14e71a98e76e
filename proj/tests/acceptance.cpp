// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit on
// any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "iwasawa/identities.hpp"
#include "iwasawa/lu_ul.hpp"
#include "iwasawa/padic_iwasawa.hpp"
#include "iwasawa/pluecker.hpp"
#include "iwasawa/random.hpp"
#include "iwasawa/real_iwasawa.hpp"
#include "lu_ul_formulas.hpp"
#include "oracles.hpp"

using namespace iwasawa;

namespace {

const std::vector<unsigned long> kPrimes{2, 3, 5, 7};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects a count of checks and the first failure message.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks << " checks, " << failures << " failures";
    if (failures) os << " (first: " << first << ")";
    return Outcome{failures == 0, os.str()};
  }
};

bool integral(const RatMatrix& m, unsigned long p) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && oracle::valuation(m(i, j), p) < 0) return false;
  return true;
}

std::vector<Valuation> pluecker_valuations(const RatMatrix& m, Prime p) {
  std::vector<Valuation> out;
  for (std::size_t k = 1; k < m.rows(); ++k) out.push_back(dilaton_norm_unified(m, k, Place::finite(p)).valuation);
  return out;
}

// The fuzz corpus shared by criteria 1 and 2: products of integer unit
// triangulars and signed permutations, every other one conjugated into
// SL(n, Q) by rational unit triangulars and a torus.
std::vector<RatMatrix> fuzz_corpus() {
  MatrixGenerator gen(2024);
  std::vector<RatMatrix> out;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    out.push_back(i % 2 == 0 ? gen.special_linear_integer(n) : gen.special_linear(n));
  }
  return out;
}

Outcome criterion1(const std::vector<RatMatrix>& corpus) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (unsigned long p : kPrimes) {
      const PadicIwasawa dec = decompose_padic(corpus[i], Prime(p));
      const std::string where = "matrix " + std::to_string(i) + " p=" + std::to_string(p);
      t.expect(dec.N * dec.A * dec.K == corpus[i], where + ": N*A*K != M");
      t.expect(is_unit_upper_triangular(dec.N) && is_diagonal(dec.A), where + ": N/A shape");
      t.expect(integral(dec.K, p), where + ": K not integral");
      t.expect(oracle::det(dec.K) == Rational(1), where + ": det K != 1");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os.precision(3);
  os << corpus.size() << " matrices x 4 primes in " << secs << " s";
  return t.outcome(os.str());
}

Outcome criterion2(const std::vector<RatMatrix>& corpus) {
  Tally t;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (unsigned long p : kPrimes) {
      const Prime prime(p);
      const auto recursive = decompose_padic(corpus[i], prime).dilaton_valuations;
      const auto closed = dilaton_valuations(corpus[i], prime);
      const auto norms = pluecker_valuations(corpus[i], prime);
      t.expect(recursive == closed && closed == norms,
               "matrix " + std::to_string(i) + " p=" + std::to_string(p) + " disagrees");
    }
  }
  return t.outcome("recursion vs min formula vs Pluecker norms");
}

Outcome criterion3() {
  MatrixGenerator gen(303);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const Prime p(kPrimes[static_cast<std::size_t>(i) % kPrimes.size()]);
    const PadicIwasawa dec = decompose_padic(gen.special_linear(n), p);
    const PadicIwasawa moved = apply_family(dec, gen.family_params(n, p), p);
    const std::string where = "triple " + std::to_string(i);
    t.expect(moved.N * moved.A * moved.K == dec.M, where + ": reconstruction");
    t.expect(verify_membership(moved, p).all_pass(), where + ": membership");
    t.expect(moved.dilaton_valuations == dec.dilaton_valuations, where + ": valuations moved");
  }
  return t.outcome("200 (decomposition, X, Y) triples");
}

Outcome criterion4() {
  MatrixGenerator gen(404);
  Tally t;
  double worst_orth = 0, worst_rel = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const RatMatrix m = i % 2 == 0 ? gen.special_linear(n) : gen.special_linear_integer(n);
    const std::string where = "matrix " + std::to_string(i);
    const RealIwasawa dec = real_decompose(m);
    const ULResult ul = ul_decompose(m * m.transpose(), SignedPermutation::identity(n));
    t.expect(dec.N == ul.V, where + ": N != V");
    Rational y2 = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      y2 *= ul.Delta(k, k);
      t.expect(dec.dilatons_squared[k] == y2, where + ": y^2 != product of Delta");
    }
    worst_orth = std::max(worst_orth, dec.residuals.orthogonality);
    worst_rel = std::max(worst_rel, dec.residuals.reconstruction / dec.residuals.matrix_scale);
    t.expect(dec.residuals.orthogonality <= 1e-9, where + ": |KK^T - I| too large");
    t.expect(dec.residuals.reconstruction <= 1e-9 * dec.residuals.matrix_scale, where + ": |NAK - M| too large");
  }
  std::ostringstream os;
  os << "worst |KK^T-I|=" << worst_orth << ", worst |NAK-M|/|M|=" << worst_rel;
  return t.outcome(os.str());
}

Outcome criterion5() {
  const IdentitySuiteReport report = run_identity_suite(IdentitySuiteConfig{});
  Tally t;
  std::ostringstream os;
  for (std::size_t i = 0; i < kIdentityKinds; ++i) {
    const auto& tally = report.tallies[i];
    t.checks += tally.checked;
    t.failures += tally.checked - tally.passed;
    os << (i ? ", " : "") << to_string(static_cast<IdentityKind>(i)) << " " << tally.passed << "/" << tally.checked;
  }
  if (!report.failures.empty()) t.first = report.failures.front();
  return Outcome{report.all_pass() && t.failures == 0 && t.checks > 0,
                 t.outcome("100 matrices per n in 2..6: " + os.str()).detail};
}

Outcome criterion6() {
  MatrixGenerator gen(606);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    const RatMatrix m = gen.rational_matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t r = k; r < n; ++r) rows.push_back(m.row(r));
      Rational sum;
      for (const auto& e : anti_leading_minors(m, n - k)) sum += e.value * e.value;
      t.expect(epsilon_product(rows, rows) == sum,
               "matrix " + std::to_string(i) + " k=" + std::to_string(k) + ": Gram != sum of squares");
    }
  }
  return t.outcome("eps(V_{k+1..n}; V_{k+1..n}) = sum of squared anti-leading minors");
}

Outcome criterion7() {
  MatrixGenerator gen(707);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    RatMatrix m = gen.nonsingular(n);
    if (i % 4 == 0 && n > 1) {
      m(0, 0) = 0;
      if (determinant(m).is_zero()) m(0, 0) = 1;
    }
    const std::string where = "matrix " + std::to_string(i);
    const LUResult lu = lu_decompose(m);
    t.expect(lu.L * lu.D * lu.U * lu.P.inverse_matrix() == m, where + ": LU reconstruction");
    t.expect(formulas::lu_mismatches(lu.P.apply_right(m), lu) == 0, where + ": LU element formula");
    for (std::size_t a = 0; a < n; ++a) {
      if (m(n - 1, a).is_zero()) continue;
      const ULResult ul = strong_ul_decompose(m, a);
      t.expect(ul.V * ul.Delta * ul.Lambda * ul.Pi.inverse_matrix() == m, where + ": UL reconstruction");
      t.expect(ul.Pi.mapping().back() == a, where + ": pinned column");
      t.expect(formulas::ul_mismatches(ul.Pi.apply_right(m), ul) == 0, where + ": UL element formula");
      t.expect(formulas::reversal_relation_holds(m, ul), where + ": reversal relation");
    }
  }
  return t.outcome("200 nonsingular matrices, every admissible pinned column");
}

Outcome criterion8() {
  MatrixGenerator gen(808);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const Prime p(kPrimes[static_cast<std::size_t>(i) % kPrimes.size()]);
    const RatMatrix m = gen.special_linear(n);
    const auto base = dilaton_valuations(m, p);
    t.expect(dilaton_valuations(gen.unit_upper(n, false) * m, p) == base, "left probe " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    const unsigned long pv = kPrimes[static_cast<std::size_t>(i) % kPrimes.size()];
    const Prime p(pv);
    const RatMatrix m = gen.special_linear(n);
    const RatMatrix k = gen.compact_element(n, p);
    t.expect(integral(k, pv) && oracle::det(k) == Rational(1), "right probe " + std::to_string(i) + ": K not in SL(n,Z_p)");
    t.expect(dilaton_valuations(m * k, p) == dilaton_valuations(m, p), "right probe " + std::to_string(i));
  }
  return t.outcome("100 left unit-upper probes, 100 right SL(n,Z_p) probes");
}

}  // namespace

int main() {
  const auto corpus = fuzz_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 exact p-adic reconstruction and K membership", [&] { return criterion1(corpus); }},
      {"2 triple agreement of dilaton valuations", [&] { return criterion2(corpus); }},
      {"3 non-uniqueness family", criterion3},
      {"4 real closed forms and floating tolerances", criterion4},
      {"5 minor identity suite", criterion5},
      {"6 Gram determinant equals sum of squared minors", criterion6},
      {"7 LU / strong UL element formulas and reversal relation", criterion7},
      {"8 invariance probes", criterion8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = Outcome{false, std::string("threw ") + e.what()};
    }
    std::printf("%s [criterion %s]: %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str());
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
