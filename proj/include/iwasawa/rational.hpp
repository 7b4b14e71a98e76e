#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace iwasawa {

// Exact rational number in canonical form: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  // "num" or "num/den" with optional leading sign; den must be nonzero.
  static Rational parse(std::string_view text);
  // Accepts the plain forms above and decimal notation ("-1.25", "3e-2"),
  // converting decimals exactly. Sets *was_decimal to true when a decimal was
  // seen and leaves it untouched otherwise.
  static Rational parse_exact(std::string_view text, bool* was_decimal = nullptr);
  // Exact value of a finite binary64.
  static Rational from_double(double value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// A verified prime p >= 2.
class Prime {
 public:
  // Throws NonPrime.
  explicit Prime(std::uint64_t p);
  std::uint64_t value() const { return value_; }
  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
};

// A completion of Q: a finite prime p or the real place.
class Place {
 public:
  static Place finite(std::uint64_t p) { return Place(Prime(p)); }
  static Place finite(Prime p) { return Place(p); }
  static Place infinite() { return Place(); }
  // "inf", "infinity", "real" or a decimal prime.
  static Place parse(std::string_view text);

  bool is_finite() const { return prime_.has_value(); }
  Prime prime() const;
  std::string to_string() const;
  friend bool operator==(const Place&, const Place&) = default;

 private:
  Place() = default;
  explicit Place(Prime p) : prime_(p) {}
  std::optional<Prime> prime_;
};

// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long value) { return Valuation(value); }

  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: finite.
  long value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(*a.value_ + *b.value_);
  }
  friend Valuation operator-(const Valuation& a) {
    if (a.is_infinite()) return a;
    return finite(-*a.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

 private:
  Valuation() = default;
  explicit Valuation(long v) : value_(v) {}
  std::optional<long> value_;
};

enum class PadicClass { Unit, NonUnitInteger, NonInteger };

std::string_view to_string(PadicClass c);

// Exponent a with x = (m'/n') p^a, m' and n' coprime to p; +inf for x = 0.
Valuation padic_valuation(const Rational& x, Prime p);
Valuation padic_valuation(const Rational& x, std::uint64_t p);

PadicClass classify_padic(const Rational& x, Prime p);
PadicClass classify_padic(const Rational& x, std::uint64_t p);

// p^(-v) as an exact rational; zero for v = +inf.
Rational padic_norm(const Valuation& v, Prime p);

}  // namespace iwasawa
