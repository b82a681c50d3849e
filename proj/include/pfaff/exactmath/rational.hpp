#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "pfaff/exactmath/errors.hpp"

namespace pfaff {

/// Arbitrary-precision rational number, always in lowest terms with a positive
/// denominator (GMP canonical form).
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q", decimals such as "-0.125" and scientific "1e-3";
  /// decimals are converted exactly.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& value() const { return q_; }
  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_one() const { return q_ == 1; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  [[nodiscard]] std::string to_string() const { return q_.get_str(); }

  [[nodiscard]] Rational abs() const {
    mpq_class r;
    mpq_abs(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] Rational pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(n, d);
  }

 private:
  mpq_class q_{0};
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse(s.substr(0, slash));
    const Rational den = parse(s.substr(slash + 1));
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational literal with zero denominator");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = (s[pos++] == '-');
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return fail();
    ++pos;
    std::size_t consumed = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &consumed);
    } catch (const std::exception&) {
      return fail();
    }
    if (pos + consumed != s.size()) return fail();
    exponent += e;
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(mpz_class(mantissa * scale), mpz_class(1));
  return Rational(mantissa, scale);
}

}  // namespace pfaff
