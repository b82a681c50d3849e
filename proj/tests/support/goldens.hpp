#pragma once

// Reference data for the J2 and I_n families, written out by hand and shared by the
// unit tests and the acceptance runner.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pfaff/dfmodels/models.hpp"
#include "pfaff/gaussmanin.hpp"

namespace goldens {

using namespace pfaff;
using RF = RationalFunction;

inline RF rf(const std::string& s) { return parse_rational_function(s); }

inline IndexSet by_label(const ArrangementFamily& fam, const std::vector<std::string>& labels) {
  IndexSet s;
  for (const auto& l : labels) s.push_back(fam.index_of(l));
  return s;
}

/// Raw OS element from (coefficient, ordered label tuple) pairs.
inline OSElement<RF> os(const ArrangementFamily& fam,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& terms) {
  OSElement<RF> e;
  for (const auto& [c, labels] : terms) e.add(by_label(fam, labels), rf(c));
  return e;
}

/// sum_k scale_k * v_k for integer vectors v_k.
inline std::vector<RF> combo(const std::vector<std::pair<std::string, std::vector<int>>>& parts) {
  std::vector<RF> out(parts.front().second.size(), RF(0));
  for (const auto& [s, v] : parts)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += rf(s) * RF(Rational(v[i]));
  return out;
}

inline std::size_t fij(std::size_t n, std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }
inline std::size_t fk(std::size_t n, std::size_t k) { return n * n + (k - 1); }

inline std::string a_(std::size_t i) { return "a" + std::to_string(i); }
inline std::string V(std::size_t i) { return "V" + std::to_string(i); }
inline std::string H(std::size_t i) { return "H" + std::to_string(i); }

/// Declared factor carrying dlog(x_p - x_q), or nullopt when x_p - x_q is constant.
inline std::optional<std::size_t> factor_of_difference(const ArrangementFamily& fam, std::size_t p, std::size_t q) {
  const Poly d = models::in_point(p) - models::in_point(q);
  if (d.is_constant()) return std::nullopt;
  for (std::size_t k = 0; k < fam.declared_factors.size(); ++k) {
    const Poly& l = fam.declared_factors[k];
    if (l == d || l == -d) return k;
  }
  throw std::logic_error("no declared factor for x" + std::to_string(p) + "-x" + std::to_string(q));
}

// βnbc sets

inline const std::vector<std::vector<std::string>> kJ2BetaNbc{{"2", "5"}, {"2", "6"}, {"2", "7"}, {"3", "5"},
                                                              {"3", "6"}, {"3", "7"}, {"6", "7"}};

/// {V_i, H_j} for i, j >= 1 together with {V_i, D}.
inline std::vector<std::vector<std::string>> in_beta_nbc(std::size_t n) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out.push_back({V(i), H(j)});
    out.push_back({V(i), "D"});
  }
  return out;
}

// Basis forms, before straightening.

struct ThetaCase {
  std::string name;
  IndexSet set;
  OSElement<RF> form;
};

inline std::vector<ThetaCase> j2_theta(const ArrangementFamily& fam) {
  const std::vector<OSElement<RF>> forms{
      os(fam, {{"b*c", {"3", "5"}}}),
      os(fam, {{"b*c", {"2", "6"}}}),
      os(fam, {{"c*g", {"3", "7"}}}),
      os(fam, {{"c*g", {"6", "7"}}}),
      os(fam, {{"c^2", {"3", "6"}}}),
      os(fam, {{"b*g", {"2", "7"}}, {"b*g", {"5", "7"}}}),
      os(fam, {{"b^2", {"2", "5"}}, {"b*g", {"7", "5"}}}),
  };
  const auto basis = models::sets_from_labels(fam, models::j2_basis_labels());
  std::vector<ThetaCase> out;
  for (std::size_t i = 0; i < forms.size(); ++i) out.push_back({"eta_" + std::to_string(i + 1), basis[i], forms[i]});
  return out;
}

inline std::vector<ThetaCase> in_theta(const ArrangementFamily& fam, std::size_t n) {
  std::vector<ThetaCase> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j)
      out.push_back({V(i) + H(j), by_label(fam, {V(i), H(j)}),
                     i == j ? os(fam, {{a_(i) + "^2", {V(i), H(i)}}, {a_(i) + "*g", {"D", H(i)}}})
                            : os(fam, {{a_(i) + "*" + a_(j), {V(i), H(j)}}})});
    out.push_back({V(i) + "D", by_label(fam, {V(i), "D"}),
                   os(fam, {{a_(i) + "*g", {V(i), "D"}}, {a_(i) + "*g", {H(i), "D"}}})});
  }
  return out;
}

// Expansions of omega_pq = dlog L_p ^ dlog L_q in the standard basis.

struct ExpansionCase {
  std::string p, q;
  std::vector<RF> coords;
};

inline std::vector<ExpansionCase> j2_expansions() {
  const std::vector<int> big{2, 2, 1, -1, 2, 1, 2};
  return {
      {"3", "4", combo({{"-1/(a*c)", {1, 0, 1, 0, 1, 0, 0}}})},
      {"1", "6", combo({{"-1/(a*c)", {0, 1, 0, -1, 1, 0, 0}}})},
      {"2", "4", combo({{"-1/(a*b)", {0, 1, 0, 0, 0, 1, 1}}})},
      {"1", "5", combo({{"-1/(a*b)", {1, 0, 0, 0, 0, 0, 1}}})},
      {"2", "5", combo({{"1/(b*(2*b+g))", {0, 0, 0, 0, 0, 1, 2}}})},
      {"2", "7", combo({{"1/(b*g)", {0, 0, 0, 0, 0, 1, 1}}, {"-1/(g*(2*b+g))", {0, 0, 0, 0, 0, 1, 2}}})},
      {"1", "4", combo({{"1/(a*(2*a+g))", big}})},
      {"5", "7", combo({{"-1/(b*g)", {0, 0, 0, 0, 0, 0, 1}}, {"1/(g*(2*b+g))", {0, 0, 0, 0, 0, 1, 2}}})},
      {"1", "7", combo({{"-1/(g*(2*a+g))", big}, {"1/(a*g)", {1, 1, 0, -1, 1, 0, 1}}})},
      {"4", "7", combo({{"1/(g*(2*a+g))", big}, {"-1/(a*g)", {1, 1, 1, 0, 1, 1, 1}}})},
  };
}

/// The eight expansion patterns of I_n, instantiated for every k = 1..n.
inline std::vector<ExpansionCase> in_expansions(std::size_t n) {
  const std::size_t r = n * n + n;
  auto unit = [&](std::size_t idx) {
    std::vector<int> v(r, 0);
    v[idx] = 1;
    return v;
  };
  auto sum = [&](auto pred) {
    std::vector<int> v(r, 0);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (pred(i, j)) v[fij(n, i, j)] += 1;
    return v;
  };
  auto plus = [](std::vector<int> a, const std::vector<int>& b, int k = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
  };
  std::vector<int> all_d(r, 0);
  for (std::size_t k = 1; k <= n; ++k) all_d[fk(n, k)] = 1;
  const auto all_vh = sum([](auto, auto) { return true; });
  const auto zero_block = plus(all_d, all_vh, 2);

  std::vector<ExpansionCase> out{
      {"V0", "H0", combo({{"1/((2*a0+g)*a0)", zero_block}})},
      {"V0", "D", combo({{"-1/((2*a0+g)*g)", zero_block}, {"1/(a0*g)", all_vh}})},
      {"H0", "D", combo({{"1/((2*a0+g)*g)", zero_block}, {"-1/(a0*g)", plus(all_d, all_vh)}})},
  };
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string ak = a_(k);
    const auto col_k = sum([&](auto, auto j) { return j == k; });
    const auto row_k = sum([&](auto i, auto) { return i == k; });
    const auto kk = plus(unit(fk(n, k)), unit(fij(n, k, k)), 2);
    out.push_back({V(0), H(k), combo({{"-1/(a0*" + ak + ")", col_k}})});
    out.push_back({V(k), H(0), combo({{"-1/(a0*" + ak + ")", plus(unit(fk(n, k)), row_k)}})});
    out.push_back({V(k), H(k), combo({{"1/((2*" + ak + "+g)*" + ak + ")", kk}})});
    out.push_back({V(k), "D",
                   combo({{"-1/((2*" + ak + "+g)*g)", kk},
                          {"1/(" + ak + "*g)", plus(unit(fk(n, k)), unit(fij(n, k, k)))}})});
    out.push_back({H(k), "D", combo({{"1/((2*" + ak + "+g)*g)", kk}, {"-1/(" + ak + "*g)", unit(fij(n, k, k))}})});
  }
  return out;
}

// J2 connection matrices A..E on dlog x, dlog y, dlog(x-1), dlog(y-1), dlog(x-y).

inline const std::vector<std::vector<std::vector<std::string>>> kJ2Connection{
    {{"a+c", "0", "0", "0", "0", "0", "c"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"g", "0", "2*a+c+g", "c", "g", "c", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "c", "0", "-c", "a+c", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0"},
     {"0", "a+c", "0", "0", "0", "c", "c"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "-g", "c", "2*a+c+g", "-g", "c", "0"},
     {"c", "0", "c", "0", "a+c", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"}},
    {{"b+g", "0", "-b", "0", "0", "0", "-c"},
     {"0", "c", "0", "0", "-b", "0", "0"},
     {"-g", "0", "2*b", "0", "0", "-c", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "-c", "0", "0", "b", "0", "0"},
     {"g", "0", "-2*b", "0", "0", "c", "0"},
     {"-b-g", "0", "b", "0", "0", "0", "c"}},
    {{"c", "0", "0", "0", "-b", "0", "0"},
     {"0", "b+g", "0", "b", "0", "-c", "-c"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "g", "0", "2*b", "0", "-c", "0"},
     {"-c", "0", "0", "0", "b", "0", "0"},
     {"0", "-g", "0", "-2*b", "0", "c", "0"},
     {"0", "-b", "0", "b", "0", "0", "c"}},
    {{"0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "c", "-c", "-g", "0", "0"},
     {"0", "0", "-c", "c", "g", "0", "0"},
     {"0", "0", "-c", "c", "g", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0"}},
};

inline std::vector<Matrix<RF>> j2_expected() {
  std::vector<Matrix<RF>> out;
  for (const auto& rows : kJ2Connection) {
    Matrix<RF> m(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) m(i, j) = rf(rows[i][j]);
    out.push_back(std::move(m));
  }
  return out;
}

/// Connection matrices assembled from the three I_n equations, one entry at a time.
inline std::vector<Matrix<RF>> in_expected(const ArrangementFamily& fam, std::size_t n) {
  const std::size_t r = n * n + n;
  std::vector<Matrix<RF>> m(fam.declared_factors.size(), Matrix<RF>(r, r));
  auto add = [&](std::size_t p, std::size_t q, std::size_t row, std::size_t col, const std::string& c) {
    if (auto f = factor_of_difference(fam, p, q)) m[*f](row, col) += rf(c);
  };

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::size_t row = fij(n, i, j);
      add(i, j, row, row, a_(i) + "+" + a_(j) + "+g");
      add(i, j, row, fij(n, j, j), "-" + a_(i));
      add(i, j, row, fij(n, i, i), "-" + a_(j));
      add(i, j, row, fk(n, i), "-" + a_(j));
      for (std::size_t l = 1; l <= n; ++l) add(i, 0, row, fij(n, l, j), a_(i));
      add(i, 0, row, row, a_(0));
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        add(i, k, row, row, a_(k));
        add(i, k, row, fij(n, k, j), "-" + a_(i));
      }
      add(j, 0, row, fk(n, i), a_(j));
      for (std::size_t l = 1; l <= n; ++l) add(j, 0, row, fij(n, i, l), a_(j));
      add(j, 0, row, row, a_(0));
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        add(j, k, row, row, a_(k));
        add(j, k, row, fij(n, i, k), "-" + a_(j));
      }
    }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t row = fij(n, i, i);
    for (std::size_t l = 1; l <= n; ++l) {
      add(i, 0, row, fij(n, l, i), a_(i) + "+g");
      add(i, 0, row, fij(n, i, l), a_(i));
      add(i, 0, row, fk(n, l), "-" + a_(i));
    }
    add(i, 0, row, row, "2*" + a_(0));
    add(i, 0, row, fk(n, i), a_(i));
    for (std::size_t k = 1; k <= n; ++k) {
      if (k == i) continue;
      add(i, k, row, fk(n, k), a_(i));
      add(i, k, row, fij(n, i, k), "-" + a_(i));
      add(i, k, row, fij(n, k, i), "-" + a_(i));
      add(i, k, row, row, "2*" + a_(k));
      add(i, k, row, fij(n, k, i), "-g");
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t row = fk(n, i);
    add(i, 0, row, row, "2*" + a_(0) + "+g");
    for (std::size_t l = 1; l <= n; ++l) {
      add(i, 0, row, fk(n, l), "2*" + a_(i));
      add(i, 0, row, fij(n, i, l), "g");
      add(i, 0, row, fij(n, l, i), "-g");
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (k == i) continue;
      add(i, k, row, row, "2*" + a_(k));
      add(i, k, row, fk(n, k), "-2*" + a_(i));
      add(i, k, row, fij(n, k, i), "g");
      add(i, k, row, fij(n, i, k), "-g");
    }
  }
  return m;
}

// Determinants of the I_n T-matrix, expected up to sign.

struct DeltaCase {
  std::array<std::string, 3> labels;
  Poly expected;
};

inline std::vector<DeltaCase> in_deltas(std::size_t n) {
  std::vector<DeltaCase> out;
  auto x = [](std::size_t i) { return models::in_point(i); };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      out.push_back({{V(i), H(j), "D"}, x(i) - x(j)});
      if (i != j) {
        out.push_back({{V(i), V(j), "D"}, x(i) - x(j)});
        out.push_back({{H(i), H(j), "D"}, x(i) - x(j)});
      }
      for (std::size_t k = 0; k <= n; ++k) {
        if (k != i) out.push_back({{V(i), H(j), V(k)}, x(i) - x(k)});
        if (k != j) out.push_back({{V(i), H(j), H(k)}, x(j) - x(k)});
      }
    }
  return out;
}

inline std::string matrix_diff(const Matrix<RF>& got, const Matrix<RF>& want, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (!(got(i, j) == want(i, j)))
        out += "  row " + labels[i] + " col " + labels[j] + ": got " + got(i, j).to_string() + ", want " +
               want(i, j).to_string() + "\n";
  return out;
}

}  // namespace goldens
