#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/exactmath.hpp"

namespace pfaff::models {

using MultiIndex = std::vector<unsigned>;

/// Linear differential operator sum_alpha c_alpha(x) d^alpha in normal form
/// (coefficients to the left). Coefficients may also contain weight symbols.
class PdeOperator {
 public:
  PdeOperator() = default;
  explicit PdeOperator(std::vector<Symbol> vars) : vars_(std::move(vars)) {}

  static PdeOperator scalar(std::vector<Symbol> vars, const Poly& c) {
    PdeOperator p(std::move(vars));
    p.add(MultiIndex(p.vars_.size(), 0), c);
    return p;
  }
  static PdeOperator partial(std::vector<Symbol> vars, std::size_t i, unsigned order = 1) {
    PdeOperator p(std::move(vars));
    MultiIndex a(p.vars_.size(), 0);
    a[i] = order;
    p.add(a, Poly(1));
    return p;
  }

  [[nodiscard]] const std::vector<Symbol>& vars() const { return vars_; }
  [[nodiscard]] const std::map<MultiIndex, Poly>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Poly coefficient(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Poly(0) : it->second;
  }

  [[nodiscard]] unsigned order() const {
    unsigned o = 0;
    for (const auto& [a, c] : terms_) {
      unsigned s = 0;
      for (auto e : a) s += e;
      o = std::max(o, s);
    }
    return o;
  }

  void add(const MultiIndex& a, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PdeOperator operator+(PdeOperator a, const PdeOperator& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend PdeOperator operator-(PdeOperator a, const PdeOperator& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
  }
  [[nodiscard]] PdeOperator scaled(const Poly& k) const {
    PdeOperator r(vars_);
    for (const auto& [m, c] : terms_) r.add(m, c * k);
    return r;
  }

  /// Composition in the Weyl algebra:
  /// (p d^alpha)(q d^beta) = p sum_{gamma <= alpha} binom(alpha, gamma) (d^gamma q) d^{alpha - gamma + beta}.
  friend PdeOperator operator*(const PdeOperator& l, const PdeOperator& r) {
    PdeOperator out(l.vars_.empty() ? r.vars_ : l.vars_);
    const std::size_t n = out.vars_.size();
    for (const auto& [alpha, p] : l.terms_)
      for (const auto& [beta, q] : r.terms_) {
        MultiIndex gamma(n, 0);
        while (true) {
          Poly dq = q;
          Rational binom(1);
          for (std::size_t i = 0; i < n && !dq.is_zero(); ++i)
            for (unsigned k = 0; k < gamma[i]; ++k) {
              dq = dq.derivative(out.vars_[i]);
              binom *= Rational(static_cast<long>(alpha[i] - k), static_cast<long>(k + 1));
            }
          if (!dq.is_zero()) {
            MultiIndex m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = alpha[i] - gamma[i] + beta[i];
            out.add(m, (p * dq).scaled(binom));
          }
          std::size_t i = 0;
          while (i < n && gamma[i] == alpha[i]) gamma[i++] = 0;
          if (i == n) break;
          ++gamma[i];
        }
      }
    return out;
  }

  friend bool operator==(const PdeOperator& a, const PdeOperator& b) { return a.terms_ == b.terms_; }

  /// Applies the operator to a polynomial.
  [[nodiscard]] Poly apply(const Poly& f) const {
    Poly acc;
    for (const auto& [a, c] : terms_) {
      Poly d = f;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (unsigned k = 0; k < a[i]; ++k) d = d.derivative(vars_[i]);
      acc += c * d;
    }
    return acc;
  }

  /// Applies the operator to a function given by its partial derivatives.
  template <class Derivs>
  [[nodiscard]] double apply(const Derivs& derivative, const std::map<Symbol, double>& values) const {
    double acc = 0;
    for (const auto& [a, c] : terms_) acc += c.value_at(values) * derivative(a);
    return acc;
  }

 private:
  std::vector<Symbol> vars_;
  std::map<MultiIndex, Poly> terms_;
};

inline std::string multi_index_string(const MultiIndex& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

/// Base symbols x1..xn.
inline std::vector<Symbol> jn_base(std::size_t n) {
  std::vector<Symbol> x;
  for (std::size_t i = 1; i <= n; ++i) x.push_back(Symbol::base("x" + std::to_string(i)));
  return x;
}

/// The n operators P_1..P_n annihilating J_n, expanded to normal form.
inline std::vector<PdeOperator> pde_operators(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "the PDE system needs n >= 2, got " + std::to_string(n));
  const auto x = jn_base(n);
  const Poly a = Poly::symbol(Symbol::weight("a")), b = Poly::symbol(Symbol::weight("b"));
  const Poly c = Poly::symbol(Symbol::weight("c")), g = Poly::symbol(Symbol::weight("g"));
  auto X = [&](std::size_t i) { return Poly::symbol(x[i]); };
  auto S = [&](const Poly& p) { return PdeOperator::scalar(x, p); };
  auto D = [&](std::size_t i, unsigned k = 1) { return PdeOperator::partial(x, i, k); };

  std::vector<PdeOperator> out;
  for (std::size_t k = 0; k < n; ++k) {
    // c - (x_j - x_k) d_j
    auto shift = [&](std::size_t j) { return S(c) - S(X(j) - X(k)) * D(j); };
    PdeOperator p(x);
    for (std::size_t i = 0; i < n; ++i) {
      PdeOperator prod = S(Poly(1));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) prod = prod * shift(j);
      const PdeOperator bracket = S((Poly(1) + a + b + c) * c) -
                                  S((a + b + c.scaled(Rational(2))) * X(i) - (a + c)) * D(i) +
                                  S(X(i) * (X(i) - Poly(1))) * D(i, 2);
      p = p + prod * bracket;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        PdeOperator prod = S(Poly(1));
        for (std::size_t s = 0; s < n; ++s)
          if (s != i && s != j) prod = prod * shift(s);
        const PdeOperator mixed = S(c * c) - S(c * (X(i) - X(k))) * D(i) - S(c * (X(j) - X(k))) * D(j) +
                                  S(X(i) * X(j) - (X(i) + X(j) - Poly(1)) * X(k)) * D(i) * D(j);
        p = p + (prod * mixed).scaled(g);
      }
    out.push_back(std::move(p));
  }
  return out;
}

/// The two-variable system written out in the classical (x, y) = (x1, x2) form.
inline std::vector<PdeOperator> reference_n2_system() {
  const auto x = jn_base(2);
  const auto resolve = [&](std::string_view name) -> std::optional<Symbol> {
    if (name == "x") return x[0];
    if (name == "y") return x[1];
    for (const char* w : {"a", "b", "c", "g"})
      if (name == w) return Symbol::weight(w);
    return std::nullopt;
  };
  auto P = [&](const char* text) { return parse_poly(text, resolve); };
  auto build = [&](bool swap) {
    const char* u = swap ? "y" : "x";
    const char* v = swap ? "x" : "y";
    auto sub = [&](std::string t) {
      std::string out;
      for (char ch : t) out += ch == 'X' ? u : ch == 'Y' ? v : std::string(1, ch);
      return out;
    };
    auto idx = [&](unsigned du, unsigned dv) { return swap ? MultiIndex{dv, du} : MultiIndex{du, dv}; };
    PdeOperator op(x);
    op.add(idx(2, 1), P(sub("X*(1-X)*(X-Y)").c_str()));
    op.add(idx(2, 0), P(sub("c*X*(1-X)").c_str()));
    op.add(idx(0, 2), P(sub("c*Y*(1-Y)").c_str()));
    op.add(idx(1, 1), P(sub("(X-Y)*((a+b+2*c)*X-(a+c))-g*X*(1-X)").c_str()));
    op.add(idx(1, 0), P(sub("((a+b+2*c)*X-(a+c))*c").c_str()));
    op.add(idx(0, 1), P(sub("-((X-Y)*(1+a+b+c+g)-(a+b+2*c)*Y+(a+c))*c").c_str()));
    op.add(idx(0, 0), P("-(2*(1+a+b+c)+g)*c^2"));
    return op;
  };
  return {build(false), build(true)};
}

/// The scalar s with p = s * q, if one exists (s may depend on the weights).
inline std::optional<RationalFunction> proportionality(const PdeOperator& p, const PdeOperator& q) {
  if (q.is_zero()) return std::nullopt;
  const auto& [a0, q0] = *q.terms().begin();
  const RationalFunction s(p.coefficient(a0), q0);
  for (const auto& [a, c] : q.terms())
    if (!(RationalFunction(p.coefficient(a)) == s * RationalFunction(c))) return std::nullopt;
  for (const auto& [a, c] : p.terms())
    if (q.coefficient(a).is_zero()) return std::nullopt;
  if (s.pool() == Pool::Base || s.pool() == Pool::Mixed) return std::nullopt;
  return s;
}

}  // namespace pfaff::models
