#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfaff/arrangement/family.hpp"

namespace pfaff {

/// Sorted list of hyperplane indices.
using IndexSet = std::vector<std::size_t>;

inline std::uint64_t to_mask(const IndexSet& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

inline IndexSet from_mask(std::uint64_t m) {
  IndexSet s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1U)
    if (m & 1U) s.push_back(i);
  return s;
}

inline std::string index_set_string(const IndexSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + labels[s[k]];
  return out + "}";
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

/// Intersection data of a fiber arrangement and the derived circuit, nbc and
/// beta-nbc families. A set S is independent when the hyperplanes of S meet
/// and codim(cap S) = |S|; it is dependent when they meet and the codimension
/// drops. Sets with empty intersection are neither: they vanish in the
/// Orlik-Solomon algebra without being circuits.
class Matroid {
 public:
  explicit Matroid(Fiber fiber) : fiber_(std::move(fiber)) {
    l_ = fiber_.size();
    m_ = fiber_.dim();
    if (l_ > 63) throw Error(ErrorCode::InvalidArgument, "at most 63 hyperplanes are supported");
    for (std::size_t k = 1; k <= std::min(l_, m_ + 1); ++k)
      for (const auto& s : subsets_of_size(l_, k)) rank_cache_.emplace(to_mask(s), compute_codim(to_mask(s)));
    compute_circuits();
  }

  [[nodiscard]] const Fiber& fiber() const { return fiber_; }
  [[nodiscard]] std::size_t ground_size() const { return l_; }
  [[nodiscard]] std::size_t dim() const { return m_; }

  /// Codimension of the intersection, or std::nullopt when it is empty.
  [[nodiscard]] std::optional<std::size_t> codim(std::uint64_t mask) const {
    if (mask == 0) return 0;
    if (auto it = rank_cache_.find(mask); it != rank_cache_.end()) return it->second;
    return compute_codim(mask);
  }

  [[nodiscard]] bool meets(const IndexSet& s) const { return codim(to_mask(s)).has_value(); }

  [[nodiscard]] bool is_independent(const IndexSet& s) const {
    auto c = codim(to_mask(s));
    return c && *c == distinct_count(s);
  }

  [[nodiscard]] bool is_dependent(const IndexSet& s) const {
    auto c = codim(to_mask(s));
    return c && *c < distinct_count(s);
  }

  /// True when hyperplane h contains the (nonempty) flat cap S.
  [[nodiscard]] bool contains_flat(std::size_t h, const IndexSet& s) const {
    const auto base = codim(to_mask(s));
    if (!base) return false;
    const auto with = codim(to_mask(s) | (std::uint64_t{1} << h));
    return with && *with == *base;
  }

  [[nodiscard]] const std::vector<IndexSet>& circuits() const { return circuits_; }
  [[nodiscard]] const std::vector<IndexSet>& broken_circuits() const { return broken_; }

  [[nodiscard]] bool contains_broken_circuit(const IndexSet& s) const {
    const auto mask = to_mask(s);
    for (auto b : broken_masks_)
      if ((b & mask) == b) return true;
    return false;
  }

  /// Circuit whose broken part lies inside s, if any.
  [[nodiscard]] std::optional<IndexSet> circuit_breaking(const IndexSet& s) const {
    const auto mask = to_mask(s);
    for (std::size_t i = 0; i < broken_masks_.size(); ++i)
      if ((broken_masks_[i] & mask) == broken_masks_[i]) return circuits_[i];
    return std::nullopt;
  }

  [[nodiscard]] bool is_nbc(const IndexSet& s) const { return is_independent(s) && !contains_broken_circuit(s); }

  /// nbc simplices of dimension p, that is (p+1)-sets, in lexicographic order.
  [[nodiscard]] std::vector<IndexSet> nbc_simplices(std::size_t p) const {
    if (p + 1 > m_) throw Error(ErrorCode::InvalidArgument, "nbc dimension exceeds fiber dimension");
    std::vector<IndexSet> out;
    for (const auto& s : subsets_of_size(l_, p + 1))
      if (is_nbc(s)) out.push_back(s);
    return out;
  }

  /// nbc (m-1)-simplices; throws NbcDimMismatch when there are none.
  [[nodiscard]] std::vector<IndexSet> top_nbc() const {
    auto top = nbc_simplices(m_ - 1);
    if (top.empty())
      throw Error(ErrorCode::NbcDimMismatch, "the nbc complex has dimension below " + std::to_string(m_ - 1));
    return top;
  }

  /// Top nbc simplices S such that every H in S can be exchanged for some
  /// H' < H keeping an independent set with nonempty intersection.
  [[nodiscard]] std::vector<IndexSet> beta_nbc() const {
    std::vector<IndexSet> out;
    for (const auto& s : top_nbc()) {
      bool ok = true;
      for (std::size_t pos = 0; pos < s.size() && ok; ++pos) {
        bool replaceable = false;
        for (std::size_t h = 0; h < s[pos] && !replaceable; ++h) {
          if (std::find(s.begin(), s.end(), h) != s.end()) continue;
          IndexSet t = s;
          t[pos] = h;
          std::sort(t.begin(), t.end());
          replaceable = is_independent(t);
        }
        ok = replaceable;
      }
      if (ok) out.push_back(s);
    }
    return out;
  }

  friend bool same_combinatorics(const Matroid& a, const Matroid& b) {
    return a.l_ == b.l_ && a.m_ == b.m_ && a.rank_cache_ == b.rank_cache_;
  }

 private:
  static std::size_t distinct_count(const IndexSet& s) {
    IndexSet t = s;
    std::sort(t.begin(), t.end());
    return static_cast<std::size_t>(std::unique(t.begin(), t.end()) - t.begin());
  }

  [[nodiscard]] std::optional<std::size_t> compute_codim(std::uint64_t mask) const {
    const IndexSet s = from_mask(mask);
    Matrix<Rational> coeff(s.size(), m_), aug(s.size(), m_ + 1);
    for (std::size_t r = 0; r < s.size(); ++r) {
      const auto& h = fiber_.hyperplanes[s[r]];
      for (std::size_t j = 0; j < m_; ++j) coeff(r, j) = aug(r, j) = h.t[j];
      aug(r, m_) = h.constant;
    }
    const std::size_t rc = rank(coeff);
    if (rank(aug) != rc) return std::nullopt;
    return rc;
  }

  void compute_circuits() {
    for (std::size_t k = 2; k <= std::min(l_, m_ + 1); ++k) {
      for (const auto& s : subsets_of_size(l_, k)) {
        if (!is_dependent(s)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
          IndexSet t = s;
          t.erase(t.begin() + static_cast<long>(drop));
          minimal = is_independent(t);
        }
        if (!minimal) continue;
        circuits_.push_back(s);
        broken_.emplace_back(s.begin() + 1, s.end());
        broken_masks_.push_back(to_mask(broken_.back()));
      }
    }
  }

  Fiber fiber_;
  std::size_t l_ = 0;
  std::size_t m_ = 0;
  std::unordered_map<std::uint64_t, std::optional<std::size_t>> rank_cache_;
  std::vector<IndexSet> circuits_;
  std::vector<IndexSet> broken_;
  std::vector<std::uint64_t> broken_masks_;
};

/// Admissible base point with coordinates p/q, |p|, q <= height.
inline std::map<Symbol, Rational> random_base_point(const ArrangementFamily& fam, SeededRng& rng, long height = 10000) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<Symbol, Rational> pt;
    for (const auto& s : fam.base_vars) pt[s] = rng.rational(height);
    bool ok = true;
    for (const auto& l : fam.declared_factors) ok = ok && !l.value_at(pt).is_zero();
    if (ok) return pt;
  }
  throw Error(ErrorCode::SingularBasepoint, "could not draw an admissible base point");
}

/// Combinatorics at a random fiber, confirmed at a second independent fiber.
struct GenericMatroid {
  Matroid matroid;
  Fiber second_fiber;
};

inline GenericMatroid generic_matroid(const ArrangementFamily& fam, std::uint64_t seed) {
  fam.validate();
  SeededRng rng(seed);
  Matroid first(instantiate_fiber(fam, random_base_point(fam, rng)));
  Fiber second_fiber = instantiate_fiber(fam, random_base_point(fam, rng));
  Matroid second(second_fiber);
  if (!same_combinatorics(first, second))
    throw Error(ErrorCode::CombinatorialMismatch, fam.name + ": intersection lattice differs between two random fibers");
  return GenericMatroid{std::move(first), std::move(second_fiber)};
}

}  // namespace pfaff
