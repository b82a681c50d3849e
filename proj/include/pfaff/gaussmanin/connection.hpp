#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/gaussmanin/nabla.hpp"
#include "pfaff/gaussmanin/reduce.hpp"

namespace pfaff {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct ConnectionChecks {
  bool entries_affine_in_weights = false;
  bool second_fiber_agrees = false;
  bool specialization_agrees = false;
  std::size_t specializations = 0;
};

/// Omega = sum_k A_k dlog L_k with constant matrices over the weight field.
/// Row i of A_k holds the dlog L_k coefficients of nabla' theta_i.
struct ConnectionForm {
  std::string family;
  std::vector<Symbol> base_vars;
  std::vector<Symbol> weight_symbols;
  std::vector<std::string> basis_labels;
  std::vector<Poly> factors;
  std::vector<Matrix<RationalFunction>> matrices;
  std::uint64_t seed = kDefaultSeed;
  ConnectionChecks checks;

  [[nodiscard]] std::size_t size() const { return basis_labels.size(); }
};

struct ConnectionOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Basis order as beta-nbc sets; defaults to lexicographic order.
  std::optional<std::vector<IndexSet>> basis_order;
  bool cross_checks = true;
};

/// Per-family cache of nabla' omega_S expansions.
class NablaTable {
 public:
  explicit NablaTable(const ArrangementFamily& fam) : expander_(fam) {}

  const std::vector<NablaTerm>& terms(const IndexSet& s) {
    auto it = table_.find(s);
    if (it != table_.end()) return it->second;
    return table_.emplace(s, expander_.expand(s)).first->second;
  }

 private:
  NablaExpander expander_;
  std::map<IndexSet, std::vector<NablaTerm>> table_;
};

/// Connection matrices for the given basis at one fiber and weight values.
template <class T>
std::vector<Matrix<T>> assemble_connection(const ArrangementFamily& fam, const Matroid& mat,
                                           const std::vector<IndexSet>& basis, const std::vector<T>& weights,
                                           NablaTable& nabla) {
  std::vector<OSElement<T>> thetas;
  for (const auto& s : basis) thetas.push_back(theta(s, mat, weights));
  const Reducer<T> reducer(mat, weights, thetas);
  const std::size_t r = basis.size(), nf = fam.declared_factors.size();
  std::vector<Matrix<T>> a(nf, Matrix<T>(r, r));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<OSElement<T>> per_factor(nf);
    for (const auto& [s, c] : thetas[i].terms())
      for (const auto& term : nabla.terms(s))
        per_factor[term.factor].add(term.tuple, c * weights[term.hyperplane] * T(term.multiplier));
    for (std::size_t k = 0; k < nf; ++k) {
      if (per_factor[k].is_zero()) continue;
      const auto row = reducer.reduce(per_factor[k]);
      for (std::size_t j = 0; j < r; ++j) a[k](i, j) = row[j];
    }
  }
  return a;
}

namespace detail {

inline Matrix<Rational> specialize(const Matrix<RationalFunction>& m, const std::map<Symbol, Rational>& values) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value_at(values);
  return out;
}

/// Weight values away from the zero sets of the symbolic entries' denominators.
inline std::map<Symbol, Rational> random_weights(const ArrangementFamily& fam, SeededRng& rng) {
  std::map<Symbol, Rational> w;
  for (const auto& s : fam.weight_symbols) {
    Rational v(0);
    while (v.is_zero()) v = rng.rational(97);
    w[s] = v;
  }
  return w;
}

/// Recomputes the connection exactly at w+2 random weight specializations and
/// compares with the symbolic entries. When the entries are affine in the
/// weights, each entry is also rebuilt as an affine form from w+1 of the
/// specializations, validated on the last one and compared symbolically.
inline bool specialization_cross_check(const ArrangementFamily& fam, const Matroid& mat,
                                       const std::vector<IndexSet>& basis,
                                       const std::vector<Matrix<RationalFunction>>& symbolic, NablaTable& nabla,
                                       bool affine, SeededRng& rng, std::size_t& used) {
  const std::size_t w = fam.weight_symbols.size();
  std::vector<std::map<Symbol, Rational>> points;
  std::vector<std::vector<Matrix<Rational>>> values;
  for (std::size_t attempt = 0; points.size() < w + 2 && attempt < 20 * (w + 2); ++attempt) {
    auto pt = random_weights(fam, rng);
    try {
      auto a = assemble_connection(fam, mat, basis, specialized_weights(fam, pt), nabla);
      points.push_back(std::move(pt));
      values.push_back(std::move(a));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResonantWeights && e.code() != ErrorCode::ZeroDenominator) throw;
    }
  }
  used = points.size();
  if (points.size() < w + 2) return false;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t k = 0; k < symbolic.size(); ++k)
      if (specialize(symbolic[k], points[p]) != values[p][k]) return false;
  if (!affine) return true;
  // Solve for affine coefficients (c_0, c_1..c_w) of every entry at once.
  Matrix<Rational> design(w + 1, w + 1);
  for (std::size_t p = 0; p <= w; ++p) {
    design(p, 0) = Rational(1);
    for (std::size_t s = 0; s < w; ++s) design(p, s + 1) = points[p].at(fam.weight_symbols[s]);
  }
  const auto inv = inverse(design);
  for (std::size_t k = 0; k < symbolic.size(); ++k)
    for (std::size_t i = 0; i < symbolic[k].rows(); ++i)
      for (std::size_t j = 0; j < symbolic[k].cols(); ++j) {
        Poly fit;
        for (std::size_t c = 0; c <= w; ++c) {
          Rational coef(0);
          for (std::size_t p = 0; p <= w; ++p) coef += inv(c, p) * values[p][k](i, j);
          fit += c == 0 ? Poly(coef) : Poly::symbol(fam.weight_symbols[c - 1]).scaled(coef);
        }
        if (fit.value_at(points[w + 1]) != values[w + 1][k](i, j)) return false;
        if (!(RationalFunction(fit) == symbolic[k](i, j))) return false;
      }
  return true;
}

}  // namespace detail

/// Connection form of the family in a beta-nbc basis, with its consistency checks.
inline ConnectionForm connection_matrix(const ArrangementFamily& fam, const ConnectionOptions& opt = {}) {
  auto gm = generic_matroid(fam, opt.seed);
  const auto beta = gm.matroid.beta_nbc();
  std::vector<IndexSet> basis = opt.basis_order.value_or(beta);
  {
    std::vector<IndexSet> sorted = basis;
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    std::vector<IndexSet> b = beta;
    std::sort(sorted.begin(), sorted.end());
    std::sort(b.begin(), b.end());
    if (sorted != b) throw Error(ErrorCode::NotBetaNbc, "basis order is not a permutation of the beta-nbc sets");
  }

  NablaTable nabla(fam);
  const auto weights = symbolic_weights(fam);
  ConnectionForm out;
  out.family = fam.name;
  out.base_vars = fam.base_vars;
  out.weight_symbols = fam.weight_symbols;
  out.factors = fam.declared_factors;
  out.seed = opt.seed;
  for (const auto& s : basis) out.basis_labels.push_back(index_set_string(s, fam.labels));
  out.matrices = assemble_connection(fam, gm.matroid, basis, weights, nabla);

  bool affine = true;
  for (const auto& a : out.matrices)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        affine = affine && a(i, j).is_polynomial() && a(i, j).numerator().degree() <= 1;
  out.checks.entries_affine_in_weights = affine;

  if (opt.cross_checks) {
    const Matroid second(gm.second_fiber);
    if (assemble_connection(fam, second, basis, weights, nabla) != out.matrices)
      throw Error(ErrorCode::CrossCheckFailed, "connection differs at a second random fiber");
    out.checks.second_fiber_agrees = true;
    SeededRng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    if (!detail::specialization_cross_check(fam, gm.matroid, basis, out.matrices, nabla, affine, rng,
                                            out.checks.specializations))
      throw Error(ErrorCode::CrossCheckFailed, "symbolic connection disagrees with the weight-specialized reconstruction");
    out.checks.specialization_agrees = true;
  }
  return out;
}

}  // namespace pfaff
