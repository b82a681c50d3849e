#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "pfaff/exactmath/rational.hpp"

namespace pfaff {

/// Exact rational square root, if any.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class n = r.numerator(), d = r.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

/// Element p + q sqrt(d) of the quadratic field Q(sqrt d). When d is the
/// square of a rational the element is folded to a rational (q = 0).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) { fold(); }

  /// sqrt(d), folded when d is a rational square.
  static QuadraticNumber sqrt(const Rational& d) { return {Rational(0), Rational(1), d}; }

  [[nodiscard]] const Rational& rational_part() const { return p_; }
  [[nodiscard]] const Rational& radical_part() const { return q_; }
  [[nodiscard]] const Rational& radicand() const { return d_; }
  [[nodiscard]] bool is_rational() const { return q_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  [[nodiscard]] std::complex<double> to_complex() const {
    if (q_.is_zero()) return {p_.to_double(), 0.0};
    const double r = std::sqrt(std::abs(d_.to_double()));
    if (d_.sign() < 0) return {p_.to_double(), q_.to_double() * r};
    return {p_.to_double() + q_.to_double() * r, 0.0};
  }

  [[nodiscard]] std::string to_string() const {
    if (q_.is_zero()) return p_.to_string();
    std::string s = p_.is_zero() ? "" : p_.to_string();
    const bool neg = q_.sign() < 0;
    if (!s.empty()) s += neg ? "-" : "+";
    else if (neg) s += "-";
    const Rational aq = q_.abs();
    if (!aq.is_one()) s += aq.to_string() + "*";
    return s + "sqrt(" + d_.to_string() + ")";
  }

  QuadraticNumber operator-() const { return {-p_, -q_, d_}; }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.p_ + b.p_, a.q_ + b.q_, common(a, b)};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) { return a + (-b); }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    const Rational d = common(a, b);
    return {a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d};
  }
  [[nodiscard]] QuadraticNumber conjugate() const { return {p_, -q_, d_}; }
  /// p^2 - d q^2.
  [[nodiscard]] Rational norm() const { return p_ * p_ - d_ * q_ * q_; }
  [[nodiscard]] QuadraticNumber inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero in a quadratic field");
    return {p_ / n, -q_ / n, d_};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) { return a * b.inverse(); }

  QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
  QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
  QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_.is_zero() || a.d_ == b.d_);
  }

 private:
  static Rational common(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.q_.is_zero()) return b.d_;
    if (b.q_.is_zero() || a.d_ == b.d_) return a.d_;
    throw Error(ErrorCode::InvalidArgument, "quadratic numbers from different fields");
  }

  void fold() {
    if (q_.is_zero()) {
      d_ = Rational(0);
      return;
    }
    if (auto r = rational_sqrt(d_)) {
      p_ += q_ * *r;
      q_ = Rational(0);
      d_ = Rational(0);
    }
  }

  Rational p_{0}, q_{0}, d_{0};
};

}  // namespace pfaff
