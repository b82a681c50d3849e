#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaff/gaussmanin/connection.hpp"

namespace pfaff {

struct FlatnessFailure {
  /// "evaluation" (base directions a, b at a sample point) or "structural"
  /// (factor k against the codim-2 flat containing factors first/second).
  std::string kind;
  std::size_t first = 0, second = 0;
  std::size_t row = 0, col = 0;
  std::string value;
  std::string detail;
};

struct FlatnessReport {
  bool flat = true;
  std::size_t points_checked = 0;
  std::size_t codim2_flats = 0;
  std::uint64_t seed = kDefaultSeed;
  std::optional<FlatnessFailure> failure;
};

namespace detail {

/// Affine coefficient vector (constant, d/dx_1, ..., d/dx_b) of a linear factor.
inline std::vector<Rational> affine_vector(const Poly& l, const std::vector<Symbol>& base) {
  std::vector<Rational> v{l.constant_term()};
  for (const auto& x : base) v.push_back(l.derivative(x).constant_term());
  return v;
}

inline std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  Matrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return rank(m);
}

/// Codim-2 flats of the base arrangement as sets of factor indices.
inline std::vector<std::vector<std::size_t>> codim2_flats(const std::vector<Poly>& factors,
                                                          const std::vector<Symbol>& base) {
  std::vector<std::vector<Rational>> vec;
  std::vector<std::vector<Rational>> grad;
  for (const auto& l : factors) {
    vec.push_back(affine_vector(l, base));
    grad.emplace_back(vec.back().begin() + 1, vec.back().end());
  }
  std::vector<std::vector<std::size_t>> flats;
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (std::size_t l = k + 1; l < factors.size(); ++l) {
      if (rational_rank({grad[k], grad[l]}) < 2) continue;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < factors.size(); ++j)
        if (rational_rank({vec[k], vec[l], vec[j]}) == 2) members.push_back(j);
      if (std::find(flats.begin(), flats.end(), members) == flats.end()) flats.push_back(members);
    }
  return flats;
}

}  // namespace detail

/// Checks Omega wedge Omega = 0.
///
/// Evaluation: for each pair of base directions (a, b), the dx_a ^ dx_b
/// coefficient sum_{k<l} [A_k, A_l] (d_a L_k d_b L_l - d_b L_k d_a L_l) / (L_k L_l)
/// is evaluated exactly (weights kept symbolic) at `points` seeded random base
/// points. Structural: for every codim-2 flat P of the factors and k in P,
/// [A_k, sum_{l in P} A_l] = 0.
inline FlatnessReport flatness_check(const ConnectionForm& omega, std::uint64_t seed = kDefaultSeed,
                                     std::size_t points = 5) {
  FlatnessReport rep;
  rep.seed = seed;
  const auto& a = omega.matrices;
  const std::size_t nf = a.size(), nb = omega.base_vars.size();
  if (omega.factors.size() != nf) throw Error(ErrorCode::InvalidArgument, "factor and matrix counts differ");

  std::vector<std::vector<Matrix<RationalFunction>>> comm(nf, std::vector<Matrix<RationalFunction>>(nf));
  for (std::size_t k = 0; k < nf; ++k)
    for (std::size_t l = k + 1; l < nf; ++l) comm[k][l] = commutator(a[k], a[l]);

  auto fail = [&](FlatnessFailure f) {
    rep.flat = false;
    rep.failure = std::move(f);
    return rep;
  };
  auto first_nonzero = [](const Matrix<RationalFunction>& m) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) return std::pair{i, j};
    return std::nullopt;
  };

  SeededRng rng(seed);
  const std::size_t r = omega.size();
  for (std::size_t p = 0; p < points; ++p) {
    std::map<Symbol, Rational> pt;
    bool admissible = false;
    while (!admissible) {
      for (const auto& x : omega.base_vars) pt[x] = rng.rational(1000);
      admissible = true;
      for (const auto& l : omega.factors) admissible = admissible && !l.value_at(pt).is_zero();
    }
    for (std::size_t da = 0; da < nb; ++da)
      for (std::size_t db = da + 1; db < nb; ++db) {
        Matrix<RationalFunction> acc(r, r);
        for (std::size_t k = 0; k < nf; ++k)
          for (std::size_t l = k + 1; l < nf; ++l) {
            const auto& lk = omega.factors[k];
            const auto& ll = omega.factors[l];
            const Rational wedge = lk.derivative(omega.base_vars[da]).value_at(pt) * ll.derivative(omega.base_vars[db]).value_at(pt) -
                                   lk.derivative(omega.base_vars[db]).value_at(pt) * ll.derivative(omega.base_vars[da]).value_at(pt);
            if (wedge.is_zero()) continue;
            const RationalFunction s(wedge / (lk.value_at(pt) * ll.value_at(pt)));
            acc = acc + comm[k][l].scaled(s);
          }
        if (auto e = first_nonzero(acc))
          return fail({"evaluation", da, db, e->first, e->second, acc(e->first, e->second).to_string(),
                       "dx_" + omega.base_vars[da].name() + "^dx_" + omega.base_vars[db].name() + " coefficient at sample " +
                           std::to_string(p)});
      }
    ++rep.points_checked;
  }

  const auto flats = detail::codim2_flats(omega.factors, omega.base_vars);
  rep.codim2_flats = flats.size();
  for (const auto& flat : flats) {
    Matrix<RationalFunction> sum(r, r);
    for (auto l : flat) sum = sum + a[l];
    for (auto k : flat) {
      const auto c = commutator(a[k], sum);
      if (auto e = first_nonzero(c)) {
        std::string members;
        for (auto l : flat) members += (members.empty() ? "" : ",") + omega.factors[l].to_string();
        return fail({"structural", k, flat.front(), e->first, e->second, c(e->first, e->second).to_string(),
                     "[A_" + std::to_string(k) + ", sum over flat {" + members + "}]"});
      }
    }
  }
  return rep;
}

/// Throws NOT_FLAT with the offending pair and entry.
inline void require_flat(const FlatnessReport& rep) {
  if (rep.flat) return;
  const auto& f = *rep.failure;
  throw Error(ErrorCode::NotFlat, f.kind + " check failed: " + f.detail + ", entry (" + std::to_string(f.row) + "," +
                                      std::to_string(f.col) + ") = " + f.value);
}

}  // namespace pfaff
