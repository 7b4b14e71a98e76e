#include "iwasawa/rational.hpp"

#include <array>
#include <cctype>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digit_run(body))
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(s, 10);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto den_text = text.substr(slash + 1);
  if (!is_digit_run(den_text))
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

Rational Rational::parse_exact(std::string_view text, bool* was_decimal) {
  if (text.find_first_of(".eE") == std::string_view::npos) return parse(text);

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_text = text.substr(e + 1);
    exponent = parse_integer(exp_text, text).get_si();
    if (exp_text.size() > 6)
      throw Error(ErrorCode::ParseError, "exponent out of range: '" + std::string(text) + "'");
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    auto int_part = mantissa.substr(0, dot);
    auto frac_part = mantissa.substr(dot + 1);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  }
  if (!is_digit_run(digits))
    throw Error(ErrorCode::ParseError, "not a decimal number: '" + std::string(text) + "'");

  mpz_class num(digits, 10);
  if (negative) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (was_decimal) *was_decimal = true;
  return exponent >= 0 ? Rational(mpz_class(num * scale)) : Rational(num, scale);
}

Rational Rational::from_double(double value) {
  mpq_class q(value);
  return Rational(q);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str(10);
  return value_.get_str(10);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::SingularMatrix, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero");
  value_ /= o.value_;
  return *this;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) : value_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "real" || text == "oo") return infinite();
  if (!is_digit_run(text) || text.size() > 20)
    throw Error(ErrorCode::ParseError, "not a place: '" + std::string(text) + "'");
  mpz_class v(std::string(text), 10);
  if (v > mpz_class(std::to_string(UINT64_MAX)))
    throw Error(ErrorCode::NonPrime, std::string(text) + " exceeds the 64-bit prime range");
  return finite(static_cast<std::uint64_t>(std::stoull(std::string(text))));
}

Prime Place::prime() const {
  if (!prime_) throw Error(ErrorCode::NonPrime, "the real place has no prime");
  return *prime_;
}

std::string Place::to_string() const { return prime_ ? std::to_string(prime_->value()) : "inf"; }

std::string_view to_string(PadicClass c) {
  switch (c) {
    case PadicClass::Unit: return "unit";
    case PadicClass::NonUnitInteger: return "non_unit_integer";
    case PadicClass::NonInteger: return "non_integer";
  }
  return "unknown";
}

Valuation padic_valuation(const Rational& x, Prime p) {
  if (x.is_zero()) return Valuation::infinity();
  mpz_class prime(static_cast<unsigned long>(p.value()));
  mpz_class rest;
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.mpq().get_num_mpz_t(), prime.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.mpq().get_den_mpz_t(), prime.get_mpz_t()));
  return Valuation::finite(up - down);
}

Valuation padic_valuation(const Rational& x, std::uint64_t p) { return padic_valuation(x, Prime(p)); }

PadicClass classify_padic(const Rational& x, Prime p) {
  auto v = padic_valuation(x, p);
  if (v.is_infinite() || v.value() > 0) return PadicClass::NonUnitInteger;
  return v.value() == 0 ? PadicClass::Unit : PadicClass::NonInteger;
}

PadicClass classify_padic(const Rational& x, std::uint64_t p) { return classify_padic(x, Prime(p)); }

Rational padic_norm(const Valuation& v, Prime p) {
  if (v.is_infinite()) return Rational(0);
  mpz_class power;
  long a = v.value();
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p.value()),
                static_cast<unsigned long>(a < 0 ? -a : a));
  return a <= 0 ? Rational(power) : Rational(mpz_class(1), power);
}

}  // namespace iwasawa
