#include "iwasawa/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "iwasawa/error.hpp"
#include "iwasawa/random.hpp"

namespace iwasawa {

namespace {

using Indices = std::vector<std::size_t>;

Indices concat(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  Indices out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Indices without(std::span<const std::size_t> v, std::size_t pos) {
  Indices out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != pos) out.push_back(v[i]);
  return out;
}

Indices range(std::size_t from, std::size_t to) {
  Indices out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

IdentityReport make_report(IdentityKind kind, Rational lhs, Rational rhs) {
  const bool pass = lhs == rhs;
  return IdentityReport{kind, std::move(lhs), std::move(rhs), pass};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, what);
}

std::string describe(const Indices& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
  os << ')';
  return os.str();
}

// Rows of M against each other through the Gram matrix.
struct GramView {
  RatMatrix gram;
  explicit GramView(const RatMatrix& m) : gram(m * m.transpose()) {}
  Rational eps(const Indices& a, const Indices& b) const { return minor(gram, a, b); }
};

void check_telescope_indices(const RatMatrix& m, std::size_t mu, std::size_t nu, std::size_t r) {
  require(mu < nu && nu <= r && r < m.rows(),
          "telescope indices need mu < nu <= r <= " + std::to_string(m.rows()) + ", got (" +
              std::to_string(mu + 1) + "," + std::to_string(nu + 1) + "," + std::to_string(r + 1) + ")");
}

class SuiteRunner {
 public:
  SuiteRunner(const IdentitySuiteConfig& config, IdentitySuiteReport& report)
      : config_(config), report_(report), gen_(config.seed) {}

  void run() {
    for (std::size_t n : config_.sizes) {
      require(n >= 1, "identity suite sizes must be positive");
      for (std::size_t t = 0; t < config_.trials; ++t) {
        RatMatrix m = gen_.rational_matrix(n, n);
        if (n <= config_.enumerate_up_to)
          enumerate(m);
        else
          sample(m);
        telescopes(m);
      }
    }
  }

 private:
  void record(const IdentityReport& r, const std::string& where) {
    auto& tally = report_.tally(r.identity);
    ++tally.checked;
    if (r.pass) {
      ++tally.passed;
    } else if (report_.failures.size() < 10) {
      report_.failures.push_back(std::string(to_string(r.identity)) + " " + where + ": lhs " + r.lhs.to_string() +
                                 " != rhs " + r.rhs.to_string());
    }
  }

  void check_lemma1(const RatMatrix& m, const Indices& r, const Indices& c, const Indices& d) {
    record(lemma1_check(m, r, c, d), "r=" + describe(r) + " c=" + describe(c) + " d=" + describe(d));
  }

  void check_pair(const RatMatrix& m, const Indices& r, const Indices& c) {
    const std::string where = "r=" + describe(r) + " c=" + describe(c);
    const auto special = speciallemma1_check(m, r, c);
    record(special, where);
    // The same instance through the general lemma: c' = (c, r_{k+1}), d = r_2..r_{k+1}.
    auto general = lemma1_check(m, r, concat(c, std::span<const std::size_t>(&r.back(), 1)),
                                std::span<const std::size_t>(r).subspan(1));
    general.identity = IdentityKind::SpecialLemma1;
    general.pass = general.pass && general.lhs == special.lhs && general.rhs == special.rhs;
    record(general, where + " via lemma1");
    record(lemma2_check(m, r, c), where);
  }

  void enumerate(const RatMatrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& r : lex_subsets(n, k))
        for (const auto& c : lex_subsets(n, k))
          for (const auto& d : lex_subsets(n, k - 1)) check_lemma1(m, r.indices, c.indices, d.indices);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& r : lex_subsets(n, k + 1))
        for (const auto& c : lex_subsets(n, k)) check_pair(m, r.indices, c.indices);
  }

  Indices random_tuple(std::size_t n, std::size_t len) {
    if (gen_.integer(0, 3) == 0) {
      Indices out(len);
      for (auto& v : out) v = static_cast<std::size_t>(gen_.integer(0, static_cast<long>(n) - 1));
      return out;
    }
    Indices all = range(0, n);
    std::shuffle(all.begin(), all.end(), gen_.engine());
    return Indices(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(len));
  }

  void sample(const RatMatrix& m) {
    const long n = static_cast<long>(m.rows());
    for (std::size_t t = 0; t < config_.tuple_cap; ++t) {
      const auto k = static_cast<std::size_t>(gen_.integer(1, n));
      check_lemma1(m, random_tuple(m.rows(), k), random_tuple(m.rows(), k), random_tuple(m.rows(), k - 1));
    }
    for (std::size_t t = 0; t < config_.tuple_cap; ++t) {
      const auto k = static_cast<std::size_t>(gen_.integer(1, n - 1));
      check_pair(m, random_tuple(m.rows(), k + 1), random_tuple(m.rows(), k));
    }
  }

  void telescopes(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::size_t done = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t nu = 0; nu <= r; ++nu)
        for (std::size_t mu = 0; mu < nu; ++mu) {
          if (n > config_.enumerate_up_to && done >= config_.tuple_cap) return;
          ++done;
          const std::string where = "(mu,nu,r)=" + describe({mu, nu, r});
          record(telescope_check(m, mu, nu, r), where);
          if (auto q = telescope_quotient_check(m, mu, nu, r)) record(*q, where);
        }
  }

  const IdentitySuiteConfig& config_;
  IdentitySuiteReport& report_;
  MatrixGenerator gen_;
};

}  // namespace

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Lemma1: return "lemma1";
    case IdentityKind::SpecialLemma1: return "speciallemma1";
    case IdentityKind::Lemma2: return "lemma2";
    case IdentityKind::Telescope: return "telescope";
    case IdentityKind::TelescopeQuotient: return "telescope_quotient";
  }
  return "unknown";
}

IdentityReport lemma1_check(const RatMatrix& m, std::span<const std::size_t> r, std::span<const std::size_t> c,
                            std::span<const std::size_t> d) {
  const std::size_t k = r.size();
  require(k >= 1 && c.size() == k && d.size() + 1 == k, "lemma1 needs |r| = |c| = k >= 1 and |d| = k-1");
  const auto r_tail = r.subspan(1);
  Rational lhs = minor(m, r, c) * minor(m, r_tail, d);
  Rational rhs;
  for (std::size_t a = 0; a < k; ++a) {
    Rational term = minor(m, r, concat(c.subspan(a, 1), d)) * minor(m, r_tail, without(c, a));
    if (a % 2 == 0)
      rhs += term;
    else
      rhs -= term;
  }
  return make_report(IdentityKind::Lemma1, std::move(lhs), std::move(rhs));
}

IdentityReport speciallemma1_check(const RatMatrix& m, std::span<const std::size_t> r,
                                   std::span<const std::size_t> c) {
  const std::size_t k = c.size();
  require(k >= 1 && r.size() == k + 1, "speciallemma1 needs |r| = k+1 and |c| = k >= 1");
  const auto shared = r.subspan(k, 1);
  const auto r_tail = r.subspan(1);
  Rational lhs = minor(m, r, concat(c, shared)) * minor(m, r_tail, r_tail);
  Rational rhs;
  for (std::size_t a = 0; a < k; ++a) {
    Rational term = minor(m, r, concat(c.subspan(a, 1), r_tail)) * minor(m, r_tail, concat(without(c, a), shared));
    if (a % 2 == 0)
      rhs += term;
    else
      rhs -= term;
  }
  return make_report(IdentityKind::SpecialLemma1, std::move(lhs), std::move(rhs));
}

IdentityReport lemma2_check(const RatMatrix& m, std::span<const std::size_t> r, std::span<const std::size_t> c) {
  const std::size_t k = c.size();
  require(k >= 1 && r.size() == k + 1, "lemma2 needs |r| = k+1 and |c| = k >= 1");
  RatMatrix grid(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto rows = r.subspan(i);
    const auto shared = r.subspan(i + 1);
    for (std::size_t j = 0; j < k; ++j) grid(i, j) = minor(m, rows, concat(c.subspan(j, 1), shared));
  }
  Rational lhs = determinant(grid);
  Rational rhs = minor(m, r, concat(c, r.subspan(k, 1)));
  for (std::size_t i = 1; i < k; ++i) rhs *= minor(m, r.subspan(i), r.subspan(i));
  return make_report(IdentityKind::Lemma2, std::move(lhs), std::move(rhs));
}

IdentityReport telescope_check(const RatMatrix& m, std::size_t mu, std::size_t nu, std::size_t r) {
  check_telescope_indices(m, mu, nu, r);
  const std::size_t n = m.rows();
  GramView g(m);
  const Indices s = range(r, n);
  const Indices s1 = range(r + 1, n);
  const Indices mu_s = concat(Indices{mu}, s), nu_s = concat(Indices{nu}, s);
  const Indices mu_s1 = concat(Indices{mu}, s1), nu_s1 = concat(Indices{nu}, s1);

  Rational x = g.eps(mu_s, nu_s) * g.eps(s1, s1);
  Rational y = g.eps(mu_s1, nu_s1) * g.eps(s, s);
  Rational z = g.eps(mu_s1, s) * g.eps(nu_s1, s);
  return make_report(IdentityKind::Telescope, std::move(x), y - z);
}

std::optional<IdentityReport> telescope_quotient_check(const RatMatrix& m, std::size_t mu, std::size_t nu,
                                                       std::size_t r) {
  check_telescope_indices(m, mu, nu, r);
  const std::size_t n = m.rows();
  GramView g(m);
  const Indices s = range(r, n);
  const Indices s1 = range(r + 1, n);
  const Rational inv_y_r_sq = g.eps(s1, s1);     // y_r^-2
  const Rational inv_y_prev_sq = g.eps(s, s);    // y_{r-1}^-2
  if (inv_y_r_sq.is_zero() || inv_y_prev_sq.is_zero()) return std::nullopt;
  const Rational y_prev_sq = inv_y_prev_sq.inverse();
  const Rational x_mu = y_prev_sq * g.eps(concat(Indices{mu}, s1), s);
  const Rational x_nu = y_prev_sq * g.eps(concat(Indices{nu}, s1), s);
  const Rational ratio = inv_y_prev_sq / inv_y_r_sq;  // y_r^2 / y_{r-1}^2

  Rational lhs = g.eps(concat(Indices{mu}, s1), concat(Indices{nu}, s1)) / inv_y_r_sq - ratio * x_mu * x_nu;
  Rational rhs = g.eps(concat(Indices{mu}, s), concat(Indices{nu}, s)) / inv_y_prev_sq;
  return make_report(IdentityKind::TelescopeQuotient, std::move(lhs), std::move(rhs));
}

bool IdentitySuiteReport::all_pass() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const IdentityTally& t) { return t.checked == t.passed; });
}

IdentitySuiteReport run_identity_suite(const IdentitySuiteConfig& config) {
  IdentitySuiteReport report;
  report.config = config;
  SuiteRunner(report.config, report).run();
  return report;
}

}  // namespace iwasawa
