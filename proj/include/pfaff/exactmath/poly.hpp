#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/exactmath/rational.hpp"
#include "pfaff/exactmath/symbol.hpp"

namespace pfaff {

/// Power product of symbols, stored as (symbol, exponent) pairs sorted by
/// symbol name with strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;

  static Monomial of(Symbol s, unsigned exponent = 1) {
    Monomial m;
    if (exponent > 0) m.f_.emplace_back(s, exponent);
    return m;
  }

  [[nodiscard]] const std::vector<Factor>& factors() const { return f_; }
  [[nodiscard]] bool is_one() const { return f_.empty(); }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& [s, e] : f_) d += e;
    return d;
  }

  [[nodiscard]] unsigned degree_in(Symbol s) const {
    for (const auto& [t, e] : f_)
      if (t == s) return e;
    return 0;
  }

  [[nodiscard]] Pool pool() const {
    Pool p = Pool::Constant;
    for (const auto& [s, e] : f_) p = join_pools(p, s.pool());
    return p;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() && j < b.f_.size()) {
      if (a.f_[i].first == b.f_[j].first) {
        r.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
        ++i;
        ++j;
      } else if (a.f_[i].first < b.f_[j].first) {
        r.f_.push_back(a.f_[i++]);
      } else {
        r.f_.push_back(b.f_[j++]);
      }
    }
    for (; i < a.f_.size(); ++i) r.f_.push_back(a.f_[i]);
    for (; j < b.f_.size(); ++j) r.f_.push_back(b.f_[j]);
    return r;
  }

  [[nodiscard]] bool divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [s, e] : f_) {
      while (j < other.f_.size() && other.f_[j].first < s) ++j;
      if (j == other.f_.size() || !(other.f_[j].first == s) || other.f_[j].second < e) return false;
    }
    return true;
  }

  /// this / d; requires d.divides(*this).
  [[nodiscard]] Monomial divided_by(const Monomial& d) const {
    Monomial r;
    std::size_t j = 0;
    for (const auto& [s, e] : f_) {
      unsigned sub = 0;
      if (j < d.f_.size() && d.f_[j].first == s) sub = d.f_[j++].second;
      if (e > sub) r.f_.emplace_back(s, e - sub);
    }
    return r;
  }

  [[nodiscard]] Monomial without(Symbol s) const {
    Monomial r;
    for (const auto& f : f_)
      if (!(f.first == s)) r.f_.push_back(f);
    return r;
  }

  /// Componentwise minimum of exponents.
  [[nodiscard]] Monomial gcd(const Monomial& o) const {
    Monomial r;
    std::size_t j = 0;
    for (const auto& [s, e] : f_) {
      while (j < o.f_.size() && o.f_[j].first < s) ++j;
      if (j < o.f_.size() && o.f_[j].first == s) r.f_.emplace_back(s, std::min(e, o.f_[j].second));
    }
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& [s, e] : f_) {
      if (!out.empty()) out += '*';
      out += s.name();
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.f_.size() != b.f_.size()) return false;
    for (std::size_t i = 0; i < a.f_.size(); ++i)
      if (!(a.f_[i].first == b.f_[i].first) || a.f_[i].second != b.f_[i].second) return false;
    return true;
  }

 private:
  std::vector<Factor> f_;
};

/// Lexicographic comparison with symbols ordered by name, the first name being
/// the most significant. Returns >0 when a is the larger monomial.
inline int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      return fa[i].first < fb[j].first ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in descending lexicographic order; zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  template <std::integral T>
  Poly(T c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly symbol(Symbol s) { return monomial(Monomial::of(s), Rational(1)); }
  static Poly monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  [[nodiscard]] Rational constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& last = *terms_.rbegin();
    return last.first.is_one() ? last.second : Rational(0);
  }

  /// Value of a constant polynomial; throws if any symbol is present.
  [[nodiscard]] Rational constant_value() const {
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant: " + to_string());
    return constant_term();
  }

  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.begin()->first; }
  [[nodiscard]] const Rational& leading_coefficient() const { return terms_.begin()->second; }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  [[nodiscard]] unsigned degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
    return d;
  }

  /// Symbols occurring in the polynomial, sorted by name.
  [[nodiscard]] std::vector<Symbol> symbols() const {
    std::vector<Symbol> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.factors())
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool contains(Symbol s) const {
    for (const auto& [m, c] : terms_)
      if (m.degree_in(s) > 0) return true;
    return false;
  }

  [[nodiscard]] Pool pool() const {
    Pool p = Pool::Constant;
    for (const auto& [m, c] : terms_) p = join_pools(p, m.pool());
    return p;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return a.scaled(b.constant_term());
    if (a.is_constant()) return b.scaled(a.constant_term());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  [[nodiscard]] Poly scaled(const Rational& k) const {
    if (k.is_zero()) return Poly();
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
  }

  [[nodiscard]] Poly times_monomial(const Monomial& mono, const Rational& k) const {
    Poly r;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c * k);
    return r;
  }

  [[nodiscard]] Poly pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  [[nodiscard]] Poly derivative(Symbol s) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      const unsigned e = m.degree_in(s);
      if (e == 0) continue;
      r.add_term(m.divided_by(Monomial::of(s)), c * Rational(e));
    }
    return r;
  }

  /// Substitutes the given symbols; symbols not in the map are kept.
  [[nodiscard]] Poly substitute(const std::map<Symbol, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      Poly term(c);
      Monomial kept;
      for (const auto& [s, e] : m.factors()) {
        if (auto it = values.find(s); it != values.end())
          term *= it->second.pow(e);
        else
          kept = kept * Monomial::of(s, e);
      }
      r += term.times_monomial(kept, Rational(1));
    }
    return r;
  }

  [[nodiscard]] Poly evaluate(const std::map<Symbol, Rational>& values) const {
    std::map<Symbol, Poly> as_poly;
    for (const auto& [s, v] : values) as_poly.emplace(s, Poly(v));
    return substitute(as_poly);
  }

  /// Full evaluation; every symbol must be bound.
  [[nodiscard]] Rational value_at(const std::map<Symbol, Rational>& values) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (const auto& [s, e] : m.factors()) {
        auto it = values.find(s);
        if (it == values.end()) throw Error(ErrorCode::InvalidArgument, "unbound symbol '" + s.name() + "'");
        term *= it->second.pow(e);
      }
      total += term;
    }
    return total;
  }

  [[nodiscard]] double value_at(const std::map<Symbol, double>& values) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
      double term = c.to_double();
      for (const auto& [s, e] : m.factors()) {
        auto it = values.find(s);
        if (it == values.end()) throw Error(ErrorCode::InvalidArgument, "unbound symbol '" + s.name() + "'");
        for (unsigned k = 0; k < e; ++k) term *= it->second;
      }
      total += term;
    }
    return total;
  }

  /// Canonical text: terms in descending lex order, "*" for products,
  /// "^" for powers, rationals as "p/q".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string term;
      if (m.is_one()) {
        term = c.to_string();
      } else if (c.is_one()) {
        term = m.to_string();
      } else if (c == Rational(-1)) {
        term = "-" + m.to_string();
      } else {
        term = c.to_string() + "*" + m.to_string();
      }
      if (!first && term.front() != '-') out += '+';
      out += term;
      first = false;
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }

 private:
  TermMap terms_;
};

}  // namespace pfaff
