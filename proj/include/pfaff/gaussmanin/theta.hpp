#pragma once

#include <algorithm>
#include <vector>

#include "pfaff/arrangement.hpp"

namespace pfaff {

/// theta(S) = wedge_{p=1..m} ( sum over H containing the flat H_{i_p} cap ... cap H_{i_m}
/// of lambda_H e_H ), for S = {i_1 < ... < i_m}, straightened to nbc support.
template <class T>
OSElement<T> theta_raw(const IndexSet& s, const Matroid& mat, const std::vector<T>& weights) {
  OSElement<T> acc;
  acc.add(IndexSet{}, T(1));
  for (std::size_t p = 0; p < s.size(); ++p) {
    const IndexSet tail(s.begin() + static_cast<long>(p), s.end());
    OSElement<T> factor;
    for (std::size_t h = 0; h < mat.ground_size(); ++h)
      if (mat.contains_flat(h, tail)) factor.add(IndexSet{h}, weights[h]);
    acc = wedge(acc, factor);
  }
  return acc;
}

template <class T>
OSElement<T> theta(const IndexSet& s, const Matroid& mat, const std::vector<T>& weights) {
  const auto beta = mat.beta_nbc();
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(beta.begin(), beta.end(), sorted) == beta.end())
    throw Error(ErrorCode::NotBetaNbc, "index set is not a beta-nbc simplex");
  return os_straighten(theta_raw(sorted, mat, weights), mat);
}

/// Weights of a family as rational functions.
inline std::vector<RationalFunction> symbolic_weights(const ArrangementFamily& fam) {
  std::vector<RationalFunction> w;
  for (const auto& p : fam.weights) w.emplace_back(p);
  return w;
}

inline std::vector<Rational> specialized_weights(const ArrangementFamily& fam, const std::map<Symbol, Rational>& values) {
  std::vector<Rational> w;
  for (const auto& p : fam.weights) w.push_back(p.value_at(values));
  return w;
}

}  // namespace pfaff
