#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfaff/exactmath.hpp"

namespace pfaff {

/// One affine form constant + sum_j t_coefficients[j] * t_j with coefficients
/// polynomial in the base variables.
struct AffineFormFamily {
  Poly constant;
  std::vector<Poly> t_coefficients;

  /// Value of the form as a polynomial in the given fiber symbols.
  [[nodiscard]] Poly as_poly(const std::vector<Symbol>& fiber_vars) const {
    Poly p = constant;
    for (std::size_t j = 0; j < t_coefficients.size(); ++j) p += t_coefficients[j] * Poly::symbol(fiber_vars[j]);
    return p;
  }
};

/// Parametric arrangement: hyperplanes listed in their fixed linear order,
/// each with a weight, plus the declared singular locus in the base.
struct ArrangementFamily {
  std::string name;
  std::vector<Symbol> base_vars;
  std::vector<Symbol> weight_symbols;
  std::vector<std::string> fiber_var_names;
  std::vector<std::string> labels;
  std::vector<AffineFormFamily> hyperplanes;
  std::vector<Poly> weights;
  std::vector<Poly> declared_factors;

  [[nodiscard]] std::size_t size() const { return hyperplanes.size(); }
  [[nodiscard]] std::size_t fiber_dim() const { return fiber_var_names.size(); }
  [[nodiscard]] std::size_t base_dim() const { return base_vars.size(); }

  [[nodiscard]] std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw Error(ErrorCode::InvalidArgument, "no hyperplane labelled '" + label + "' in " + name);
  }

  /// Checks arities, pools and non-degeneracy; throws on violation.
  void validate() const {
    const std::size_t m = fiber_dim();
    if (m == 0) throw Error(ErrorCode::InvalidArgument, name + ": fiber dimension is zero");
    if (weights.size() != hyperplanes.size() || labels.size() != hyperplanes.size())
      throw Error(ErrorCode::InvalidArgument, name + ": hyperplane, label and weight counts differ");
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      const auto& h = hyperplanes[i];
      if (h.t_coefficients.size() != m)
        throw Error(ErrorCode::InvalidArgument, name + ": hyperplane " + labels[i] + " has wrong arity");
      bool genuine = false;
      for (const auto& c : h.t_coefficients) {
        require_pool(c, Pool::Base, labels[i]);
        genuine = genuine || !c.is_zero();
      }
      require_pool(h.constant, Pool::Base, labels[i]);
      if (!genuine) throw Error(ErrorCode::InvalidArgument, name + ": hyperplane " + labels[i] + " has no t-part");
      require_pool(weights[i], Pool::Weight, labels[i]);
    }
    for (const auto& l : declared_factors) {
      require_pool(l, Pool::Base, "declared factor");
      if (l.degree() != 1) throw Error(ErrorCode::InvalidArgument, "declared factor " + l.to_string() + " is not linear");
    }
    for (std::size_t i = 0; i < declared_factors.size(); ++i)
      for (std::size_t j = i + 1; j < declared_factors.size(); ++j)
        if (primitive_normal(declared_factors[i]) == primitive_normal(declared_factors[j]))
          throw Error(ErrorCode::InvalidArgument, "declared factors " + declared_factors[i].to_string() + " and " +
                                                      declared_factors[j].to_string() + " are proportional");
  }

  /// Same family with hyperplanes listed in the order perm[0], perm[1], ...
  [[nodiscard]] ArrangementFamily reordered(const std::vector<std::size_t>& perm) const {
    if (perm.size() != size()) throw Error(ErrorCode::InvalidArgument, "order permutation has wrong length");
    std::vector<bool> seen(size(), false);
    ArrangementFamily out = *this;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] >= size() || seen[perm[i]]) throw Error(ErrorCode::InvalidArgument, "invalid order permutation");
      seen[perm[i]] = true;
      out.labels[i] = labels[perm[i]];
      out.hyperplanes[i] = hyperplanes[perm[i]];
      out.weights[i] = weights[perm[i]];
    }
    return out;
  }

 private:
  void require_pool(const Poly& p, Pool allowed, const std::string& where) const {
    const Pool got = p.pool();
    if (got != Pool::Constant && got != allowed)
      throw Error(ErrorCode::MixedPool, name + ": " + where + " expression " + p.to_string() + " lies in pool " +
                                            pool_name(got) + ", expected " + pool_name(allowed));
  }
};

/// Affine form with rational coefficients.
struct AffineForm {
  Rational constant;
  std::vector<Rational> t;
};

/// The arrangement over one base point.
struct Fiber {
  std::map<Symbol, Rational> base_point;
  std::vector<AffineForm> hyperplanes;

  [[nodiscard]] std::size_t size() const { return hyperplanes.size(); }
  [[nodiscard]] std::size_t dim() const { return hyperplanes.empty() ? 0 : hyperplanes.front().t.size(); }
};

inline Fiber instantiate_fiber(const ArrangementFamily& fam, const std::map<Symbol, Rational>& point) {
  for (const auto& s : fam.base_vars)
    if (!point.contains(s)) throw Error(ErrorCode::InvalidArgument, "base point misses variable " + s.name());
  for (const auto& l : fam.declared_factors)
    if (l.value_at(point).is_zero())
      throw Error(ErrorCode::SingularBasepoint, "declared factor " + l.to_string() + " vanishes at the base point");
  Fiber f;
  f.base_point = point;
  for (const auto& h : fam.hyperplanes) {
    AffineForm a{h.constant.value_at(point), {}};
    for (const auto& c : h.t_coefficients) a.t.push_back(c.value_at(point));
    f.hyperplanes.push_back(std::move(a));
  }
  return f;
}

}  // namespace pfaff
