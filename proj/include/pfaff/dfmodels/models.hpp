#pragma once

#include <string>
#include <vector>

#include "pfaff/arrangement/family.hpp"
#include "pfaff/arrangement/matroid.hpp"

namespace pfaff::models {

namespace detail {

inline AffineFormFamily form(std::size_t m, const Poly& constant, std::vector<std::pair<std::size_t, Rational>> t) {
  AffineFormFamily f{constant, std::vector<Poly>(m)};
  for (const auto& [j, c] : t) f.t_coefficients[j] = Poly(c);
  return f;
}

inline Poly var(Symbol s) { return Poly::symbol(s); }

}  // namespace detail

/// Two-fold integral of t^a s^a (t-1)^b (s-1)^b (t-x)^c (s-y)^c (t-s)^g over
/// the base (x, y). Hyperplanes 1..7 are t, t-1, t-x, s, s-1, s-y, t-s.
inline ArrangementFamily build_j2() {
  using detail::form;
  using detail::var;
  const Symbol x = Symbol::base("x"), y = Symbol::base("y");
  const Symbol a = Symbol::weight("a"), b = Symbol::weight("b"), c = Symbol::weight("c"), g = Symbol::weight("g");
  ArrangementFamily f;
  f.name = "j2";
  f.base_vars = {x, y};
  f.weight_symbols = {a, b, c, g};
  f.fiber_var_names = {"t", "s"};
  f.labels = {"1", "2", "3", "4", "5", "6", "7"};
  f.hyperplanes = {
      form(2, Poly(0), {{0, 1}}),   form(2, Poly(-1), {{0, 1}}), form(2, -var(x), {{0, 1}}),
      form(2, Poly(0), {{1, 1}}),   form(2, Poly(-1), {{1, 1}}), form(2, -var(y), {{1, 1}}),
      form(2, Poly(0), {{0, 1}, {1, -1}}),
  };
  f.weights = {var(a), var(b), var(c), var(a), var(b), var(c), var(g)};
  f.declared_factors = {var(x), var(y), var(x) - Poly(1), var(y) - Poly(1), var(x) - var(y)};
  f.validate();
  return f;
}

/// Point of the I_n family: x_0 = 0 and x_1 = 1 are fixed, x_i for i >= 2 are
/// base variables. Returns the polynomial x_i.
inline Poly in_point(std::size_t i) {
  if (i == 0) return Poly(0);
  if (i == 1) return Poly(1);
  return Poly::symbol(Symbol::base("x" + std::to_string(i)));
}

/// Two-fold integral of prod_i (t-x_i)^{a_i} (s-x_i)^{a_i} (t-s)^g with
/// hyperplanes ordered V_0 < H_0 < V_1 < ... < V_n < H_1 < ... < H_n < D.
inline ArrangementFamily build_in(std::size_t n) {
  using detail::form;
  if (n < 2) throw Error(ErrorCode::NTooSmall, "the I_n family needs n >= 2, got " + std::to_string(n));
  ArrangementFamily f;
  f.name = "i_" + std::to_string(n);
  for (std::size_t i = 2; i <= n; ++i) f.base_vars.push_back(Symbol::base("x" + std::to_string(i)));
  std::vector<Poly> a;
  for (std::size_t i = 0; i <= n; ++i) {
    f.weight_symbols.push_back(Symbol::weight("a" + std::to_string(i)));
    a.push_back(Poly::symbol(f.weight_symbols.back()));
  }
  const Symbol g = Symbol::weight("g");
  f.weight_symbols.push_back(g);
  f.fiber_var_names = {"t", "s"};

  auto add = [&](const std::string& label, AffineFormFamily h, const Poly& w) {
    f.labels.push_back(label);
    f.hyperplanes.push_back(std::move(h));
    f.weights.push_back(w);
  };
  auto v = [&](std::size_t i) { add("V" + std::to_string(i), form(2, -in_point(i), {{0, 1}}), a[i]); };
  auto h = [&](std::size_t i) { add("H" + std::to_string(i), form(2, -in_point(i), {{1, 1}}), a[i]); };
  v(0);
  h(0);
  for (std::size_t i = 1; i <= n; ++i) v(i);
  for (std::size_t i = 1; i <= n; ++i) h(i);
  add("D", form(2, Poly(0), {{0, 1}, {1, -1}}), Poly::symbol(g));

  for (std::size_t i = 2; i <= n; ++i) {
    f.declared_factors.push_back(in_point(i));
    f.declared_factors.push_back(in_point(i) - Poly(1));
  }
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) f.declared_factors.push_back(in_point(i) - in_point(j));
  f.validate();
  return f;
}

/// n-fold integral of prod_i t_i^a (t_i-1)^b (t_i-x_i)^c prod_{i<j} (t_i-t_j)^g
/// over the base (x_1, ..., x_n).
inline ArrangementFamily build_jn(std::size_t n) {
  using detail::form;
  using detail::var;
  if (n < 2) throw Error(ErrorCode::NTooSmall, "the J_n family needs n >= 2, got " + std::to_string(n));
  const Symbol a = Symbol::weight("a"), b = Symbol::weight("b"), c = Symbol::weight("c"), g = Symbol::weight("g");
  ArrangementFamily f;
  f.name = "j_" + std::to_string(n);
  f.weight_symbols = {a, b, c, g};
  for (std::size_t i = 1; i <= n; ++i) {
    f.base_vars.push_back(Symbol::base("x" + std::to_string(i)));
    f.fiber_var_names.push_back("t" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string k = std::to_string(i + 1);
    const Poly xi = var(f.base_vars[i]);
    f.labels.insert(f.labels.end(), {"T" + k, "U" + k, "X" + k});
    f.hyperplanes.push_back(form(n, Poly(0), {{i, 1}}));
    f.hyperplanes.push_back(form(n, Poly(-1), {{i, 1}}));
    f.hyperplanes.push_back(form(n, -xi, {{i, 1}}));
    f.weights.insert(f.weights.end(), {var(a), var(b), var(c)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      f.labels.push_back("D" + std::to_string(i + 1) + std::to_string(j + 1));
      f.hyperplanes.push_back(form(n, Poly(0), {{i, 1}, {j, -1}}));
      f.weights.push_back(var(g));
    }
  for (std::size_t i = 0; i < n; ++i) {
    f.declared_factors.push_back(var(f.base_vars[i]));
    f.declared_factors.push_back(var(f.base_vars[i]) - Poly(1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) f.declared_factors.push_back(var(f.base_vars[i]) - var(f.base_vars[j]));
  f.validate();
  return f;
}

/// Hyperplane index sets for label lists, in the given order.
inline std::vector<IndexSet> sets_from_labels(const ArrangementFamily& fam,
                                              const std::vector<std::vector<std::string>>& labels) {
  std::vector<IndexSet> out;
  for (const auto& l : labels) {
    IndexSet s;
    for (const auto& x : l) s.push_back(fam.index_of(x));
    out.push_back(std::move(s));
  }
  return out;
}

/// J2 basis order {3,5}, {2,6}, {3,7}, {6,7}, {3,6}, {2,7}, {2,5}.
inline std::vector<std::vector<std::string>> j2_basis_labels() {
  return {{"3", "5"}, {"2", "6"}, {"3", "7"}, {"6", "7"}, {"3", "6"}, {"2", "7"}, {"2", "5"}};
}

/// I_n basis order: {V_i, H_j} row-major over i, j = 1..n, then {V_k, D}.
inline std::vector<std::vector<std::string>> in_basis_labels(std::size_t n) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) out.push_back({"V" + std::to_string(i), "H" + std::to_string(j)});
  for (std::size_t k = 1; k <= n; ++k) out.push_back({"V" + std::to_string(k), "D"});
  return out;
}

/// Conventional basis order of a built-in family; empty for other families.
inline std::vector<IndexSet> standard_basis(const ArrangementFamily& fam) {
  if (fam.name == "j2") return sets_from_labels(fam, j2_basis_labels());
  if (fam.name.rfind("i_", 0) == 0) return sets_from_labels(fam, in_basis_labels(std::stoul(fam.name.substr(2))));
  return {};
}

}  // namespace pfaff::models
