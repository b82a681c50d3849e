#pragma once

#include <optional>
#include <vector>

#include "pfaff/exactmath/poly.hpp"

namespace pfaff {

/// Rational c such that p / c has coprime integer coefficients and a positive
/// leading coefficient (in the lex order of Poly).
inline Rational unit_content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.value().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  return p.leading_coefficient().sign() < 0 ? -content : content;
}

inline Poly primitive_normal(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / unit_content(p));
}

/// Quotient a / b when b divides a exactly, std::nullopt otherwise.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(Rational(1) / b.constant_term());
  for (const auto& s : b.symbols())
    if (b.degree_in(s) > a.degree_in(s)) return std::nullopt;
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  Poly q;
  Poly r = a;
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms().begin();
    if (!lm.divides(rm)) return std::nullopt;
    const Monomial t = rm.divided_by(lm);
    const Rational k = rc / lc;
    q.add_term(t, k);
    r -= b.times_monomial(t, k);
  }
  return q;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::InvalidArgument, "inexact division (" + a.to_string() + ")/(" + b.to_string() + ")");
  return *q;
}

/// Coefficients of p as a polynomial in v; index k holds the coefficient of v^k.
inline std::vector<Poly> coefficients_in(const Poly& p, Symbol v) {
  std::vector<Poly> out(p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) out[m.degree_in(v)].add_term(m.without(v), c);
  return out;
}

inline Poly from_coefficients(const std::vector<Poly>& coeffs, Symbol v) {
  Poly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    r += coeffs[k].times_monomial(Monomial::of(v, static_cast<unsigned>(k)), Rational(1));
  return r;
}

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

using Dense = std::vector<Poly>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly content_of(const Dense& coeffs) {
  Poly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_normal(c) : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g.is_zero() ? Poly(1) : g;
}

inline Dense primitive_part(const Dense& coeffs) {
  const Poly cont = content_of(coeffs);
  Dense out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(exact_divide(c, cont));
  return out;
}

/// Pseudo-remainder of a by b (both dense in the main variable, b nonzero).
inline Dense pseudo_remainder(Dense r, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t dr = r.size() - 1;
    const Poly lcr = r.back();
    for (auto& c : r) c *= lcb;
    for (std::size_t j = 0; j <= db; ++j) r[j + dr - db] -= lcr * b[j];
    r.back() = Poly();
    trim(r);
  }
  return r;
}

/// gcd of two primitive polynomials in the main variable via the primitive PRS.
inline Dense primitive_prs_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.empty()) return a;
    if (b.size() == 1) return Dense{Poly(1)};
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    a = std::move(b);
    b = primitive_part(r);
  }
}

}  // namespace detail

/// Greatest common divisor over Q[symbols], normalized by primitive_normal.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_normal(b);
  if (b.is_zero()) return primitive_normal(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& mono = a.is_monomial() ? a : b;
    const Poly& other = a.is_monomial() ? b : a;
    Monomial g = mono.leading_monomial();
    for (const auto& [m, c] : other.terms()) {
      g = g.gcd(m);
      if (g.is_one()) break;
    }
    return Poly::monomial(g, Rational(1));
  }

  const auto sa = a.symbols();
  const auto sb = b.symbols();
  // A symbol present in only one argument cannot occur in the gcd: replace that
  // argument by its coefficients with respect to the symbol.
  for (const auto& s : sa) {
    if (std::find(sb.begin(), sb.end(), s) != sb.end()) continue;
    Poly g = primitive_normal(b);
    for (const auto& c : coefficients_in(a, s)) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g.is_constant()) return Poly(1);
    }
    return g;
  }
  for (const auto& s : sb) {
    if (std::find(sa.begin(), sa.end(), s) != sa.end()) continue;
    return gcd(b, a);
  }

  // Same symbol set: recurse on the symbol of lowest maximal degree.
  Symbol main = sa.front();
  unsigned best = ~0U;
  for (const auto& s : sa) {
    const unsigned d = std::max(a.degree_in(s), b.degree_in(s));
    if (d < best) {
      best = d;
      main = s;
    }
  }
  const auto ca = coefficients_in(a, main);
  const auto cb = coefficients_in(b, main);
  const Poly cont = gcd(detail::content_of(ca), detail::content_of(cb));
  const auto g = detail::primitive_prs_gcd(detail::primitive_part(ca), detail::primitive_part(cb));
  return primitive_normal(from_coefficients(g, main) * cont);
}

}  // namespace pfaff
