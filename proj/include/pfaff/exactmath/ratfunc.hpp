#pragma once

#include <map>
#include <string>

#include "pfaff/exactmath/poly_gcd.hpp"

namespace pfaff {

/// Quotient of polynomials in canonical form:
///   * gcd(numerator, denominator) = 1,
///   * the denominator has coprime integer coefficients and a positive leading
///     coefficient in descending lex order (symbols ordered by name),
///   * zero is 0/1.
/// Rational scalars therefore live in the numerator, e.g. 1/(2*a^2+a*g).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RationalFunction(T c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)

  RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize_in_place(); }

  [[nodiscard]] const Poly& numerator() const { return num_; }
  [[nodiscard]] const Poly& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
  [[nodiscard]] Pool pool() const { return join_pools(num_.pool(), den_.pool()); }

  /// Polynomial value; throws when the denominator is not constant.
  [[nodiscard]] Poly as_polynomial() const {
    if (!is_polynomial()) throw Error(ErrorCode::InvalidArgument, "not a polynomial: " + to_string());
    return num_.scaled(Rational(1) / den_.constant_term());
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
      return RationalFunction::from_reduced(a.num_ + b.num_, Poly(1));
    if (b.den_.is_constant()) return RationalFunction::from_reduced(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_constant()) return RationalFunction::from_reduced(a.num_ * b.den_ + b.num_, b.den_);
    const Poly g = gcd(a.den_, b.den_);
    const Poly bd = exact_divide(b.den_, g);
    const Poly ad = exact_divide(a.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly num = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
    Poly den = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
    return from_coprime(std::move(num), std::move(den));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational function");
    return a * b.inverse();
  }

  [[nodiscard]] RationalFunction inverse() const {
    if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero rational function");
    return from_coprime(den_, num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  [[nodiscard]] RationalFunction pow(unsigned e) const { return from_coprime(num_.pow(e), den_.pow(e)); }

  [[nodiscard]] RationalFunction derivative(Symbol s) const {
    return RationalFunction(num_.derivative(s) * den_ - num_ * den_.derivative(s), den_ * den_);
  }

  [[nodiscard]] RationalFunction substitute(const std::map<Symbol, Poly>& values) const {
    return RationalFunction(num_.substitute(values), den_.substitute(values));
  }

  [[nodiscard]] RationalFunction evaluate(const std::map<Symbol, Rational>& values) const {
    return RationalFunction(num_.evaluate(values), den_.evaluate(values));
  }

  [[nodiscard]] Rational value_at(const std::map<Symbol, Rational>& values) const {
    const Rational d = den_.value_at(values);
    if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at evaluation point: " + to_string());
    return num_.value_at(values) / d;
  }

  [[nodiscard]] double value_at(const std::map<Symbol, double>& values) const {
    return num_.value_at(values) / den_.value_at(values);
  }

  /// Canonical text "num" or "num/(den)"; the numerator is parenthesized
  /// unless it is a single term with an integer coefficient.
  [[nodiscard]] std::string to_string() const {
    if (den_ == Poly(1)) return num_.to_string();
    std::string n = num_.to_string();
    const bool bare = num_.size() == 1 && num_.leading_coefficient().is_integer();
    return (bare ? n : "(" + n + ")") + "/(" + den_.to_string() + ")";
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Full canonicalization (gcd cancellation plus denominator normalization).
  static RationalFunction normalize(const Poly& num, const Poly& den) { return RationalFunction(num, den); }

 private:
  struct Raw {};
  RationalFunction(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  static RationalFunction from_coprime(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
    if (num.is_zero()) return RationalFunction();
    const Rational k = unit_content(den);
    return RationalFunction(Raw{}, num.scaled(Rational(1) / k), den.scaled(Rational(1) / k));
  }

  static RationalFunction from_reduced(Poly num, Poly den) {
    if (den.is_constant()) return from_coprime(std::move(num), std::move(den));
    return RationalFunction(std::move(num), std::move(den));
  }

  void normalize_in_place() {
    if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      const Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
      }
    }
    const Rational k = unit_content(den_);
    num_ = num_.scaled(Rational(1) / k);
    den_ = den_.scaled(Rational(1) / k);
  }

  Poly num_;
  Poly den_;
};

inline RationalFunction normalize(const RationalFunction& rf) {
  return RationalFunction::normalize(rf.numerator(), rf.denominator());
}

}  // namespace pfaff
