#pragma once

#include <deque>
#include <map>
#include <string>

#include "pfaff/arrangement/matroid.hpp"

namespace pfaff {

/// Sorts an index tuple in place; returns the permutation sign, or 0 when an
/// index repeats.
inline int sort_with_sign(IndexSet& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

/// Linear combination of Orlik-Solomon monomials e_{i_1}...e_{i_p}, keyed by
/// increasing index tuples.
template <class T>
class OSElement {
 public:
  using TermMap = std::map<IndexSet, T>;

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Adds c * e_{t_1} ... e_{t_p} for a tuple in any order.
  void add(IndexSet tuple, const T& c) {
    if (c.is_zero()) return;
    const int sign = sort_with_sign(tuple);
    if (sign == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(tuple), sign > 0 ? c : -c);
    if (!inserted) {
      it->second += sign > 0 ? c : -c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const OSElement& o, const T& scale) {
    for (const auto& [t, c] : o.terms_) add(t, c * scale);
  }

  [[nodiscard]] T coefficient(const IndexSet& sorted_tuple) const {
    auto it = terms_.find(sorted_tuple);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Exterior product.
  friend OSElement wedge(const OSElement& a, const OSElement& b) {
    OSElement r;
    for (const auto& [ta, ca] : a.terms_)
      for (const auto& [tb, cb] : b.terms_) {
        IndexSet t = ta;
        t.insert(t.end(), tb.begin(), tb.end());
        r.add(std::move(t), ca * cb);
      }
    return r;
  }

  friend bool operator==(const OSElement& a, const OSElement& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string(const std::vector<std::string>& labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*e" + index_set_string(t, labels);
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Rewrites an element onto the nbc monomial basis: tuples with empty
/// intersection and dependent tuples vanish, and a tuple containing the broken
/// circuit C \ {c_0} is replaced using the boundary relation of C,
///   e_{c_1..c_r} = sum_{j>=1} (-1)^{j+1} e_{C \ c_j}.
template <class T>
OSElement<T> os_straighten(const OSElement<T>& raw, const Matroid& mat, std::size_t max_rewrites = 1000000) {
  OSElement<T> out;
  std::deque<std::pair<IndexSet, T>> work;
  for (const auto& [t, c] : raw.terms()) work.emplace_back(t, c);
  std::size_t rewrites = 0;
  while (!work.empty()) {
    auto [tuple, coef] = std::move(work.front());
    work.pop_front();
    if (coef.is_zero()) continue;
    const int sign = sort_with_sign(tuple);
    if (sign == 0 || !mat.is_independent(tuple)) continue;
    if (sign < 0) coef = -coef;
    const auto circuit = mat.circuit_breaking(tuple);
    if (!circuit) {
      out.add(tuple, coef);
      continue;
    }
    if (++rewrites > max_rewrites)
      throw Error(ErrorCode::NonTerminationGuard, "Orlik-Solomon straightening exceeded " + std::to_string(max_rewrites) +
                                                      " rewrites");
    // Move the broken circuit to the front: e_tuple = s * e_B e_rest.
    const IndexSet broken(circuit->begin() + 1, circuit->end());
    IndexSet rest;
    for (auto i : tuple)
      if (std::find(broken.begin(), broken.end(), i) == broken.end()) rest.push_back(i);
    IndexSet front = broken;
    front.insert(front.end(), rest.begin(), rest.end());
    const int move_sign = sort_with_sign(front);
    const T base = move_sign > 0 ? coef : -coef;
    for (std::size_t j = 1; j < circuit->size(); ++j) {
      IndexSet replaced;
      for (std::size_t k = 0; k < circuit->size(); ++k)
        if (k != j) replaced.push_back((*circuit)[k]);
      replaced.insert(replaced.end(), rest.begin(), rest.end());
      work.emplace_back(std::move(replaced), (j % 2 == 1) ? base : -base);
    }
  }
  return out;
}

}  // namespace pfaff
