#pragma once

#include <map>
#include <vector>

#include "pfaff/gaussmanin/theta.hpp"

namespace pfaff {

/// Coordinates of top-degree Orlik-Solomon classes in a theta basis, modulo
/// the image of a_lambda wedge on degree m-1.
///
/// Works in nbc coordinates of degree m: the columns [ M | Theta | I ] are row
/// reduced once (pivots restricted to M and Theta, M first), which leaves on
/// each Theta pivot row the linear functional giving that coordinate.
template <class T>
class Reducer {
 public:
  Reducer(const Matroid& mat, const std::vector<T>& weights, const std::vector<OSElement<T>>& basis) : mat_(mat) {
    const auto top = mat.top_nbc();
    for (std::size_t i = 0; i < top.size(); ++i) index_.emplace(top[i], i);
    n_ = top.size();
    r_ = basis.size();

    std::vector<std::vector<T>> image_cols;
    if (mat.dim() >= 1) {
      OSElement<T> a_lambda;
      for (std::size_t h = 0; h < mat.ground_size(); ++h) a_lambda.add(IndexSet{h}, weights[h]);
      const auto lower = mat.dim() == 1 ? std::vector<IndexSet>{IndexSet{}} : mat.nbc_simplices(mat.dim() - 2);
      for (const auto& t : lower) {
        OSElement<T> e;
        e.add(t, T(1));
        auto col = coordinates(os_straighten(wedge(a_lambda, e), mat));
        bool zero = true;
        for (const auto& x : col) zero = zero && x.is_zero();
        if (!zero) image_cols.push_back(std::move(col));
      }
    }
    p_ = image_cols.size();

    Matrix<T> big(n_, p_ + r_ + n_);
    for (std::size_t c = 0; c < p_; ++c)
      for (std::size_t i = 0; i < n_; ++i) big(i, c) = image_cols[c][i];
    for (std::size_t c = 0; c < r_; ++c) {
      const auto col = coordinates(basis[c]);
      for (std::size_t i = 0; i < n_; ++i) big(i, p_ + c) = col[i];
    }
    for (std::size_t i = 0; i < n_; ++i) big(i, p_ + r_ + i) = T(1);

    const auto pivots = rref(big, p_ + r_);
    rank_ = pivots.size();
    std::vector<long> row_of(p_ + r_, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) row_of[pivots[i]] = static_cast<long>(i);
    for (std::size_t c = 0; c < r_; ++c)
      if (row_of[p_ + c] < 0)
        throw Error(ErrorCode::ResonantWeights, "basis element " + std::to_string(c) +
                                                    " is linearly dependent on the others modulo exact classes");
    // Theta coordinates are unique when no free column reaches a Theta pivot row.
    for (std::size_t c = 0; c < r_; ++c) {
      const auto row = static_cast<std::size_t>(row_of[p_ + c]);
      for (std::size_t f = 0; f < p_ + r_; ++f)
        if (row_of[f] < 0 && !big(row, f).is_zero())
          throw Error(ErrorCode::ResonantWeights, "basis coordinates are not uniquely determined");
    }
    functional_ = Matrix<T>(r_, n_);
    for (std::size_t c = 0; c < r_; ++c)
      for (std::size_t i = 0; i < n_; ++i) functional_(c, i) = big(static_cast<std::size_t>(row_of[p_ + c]), p_ + r_ + i);
    consistency_ = Matrix<T>(n_ - rank_, n_);
    for (std::size_t row = rank_; row < n_; ++row)
      for (std::size_t i = 0; i < n_; ++i) consistency_(row - rank_, i) = big(row, p_ + r_ + i);
  }

  [[nodiscard]] std::size_t basis_size() const { return r_; }
  [[nodiscard]] std::size_t top_dimension() const { return n_; }
  [[nodiscard]] std::size_t image_rank() const { return rank_ - r_; }

  /// Coordinates of an element supported on nbc tuples.
  [[nodiscard]] std::vector<T> coordinates(const OSElement<T>& straightened) const {
    std::vector<T> v(n_, T(0));
    for (const auto& [t, c] : straightened.terms()) {
      auto it = index_.find(t);
      if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "element is not supported on nbc tuples");
      v[it->second] = c;
    }
    return v;
  }

  /// Coordinates of the class of v in the basis.
  [[nodiscard]] std::vector<T> reduce(const OSElement<T>& v) const {
    const auto x = coordinates(os_straighten(v, mat_));
    for (std::size_t row = 0; row < consistency_.rows(); ++row) {
      T acc(0);
      for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero() && !consistency_(row, i).is_zero()) acc += consistency_(row, i) * x[i];
      if (!acc.is_zero()) throw Error(ErrorCode::InconsistentSystem, "class lies outside the span of the basis");
    }
    std::vector<T> out(r_, T(0));
    for (std::size_t c = 0; c < r_; ++c)
      for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero() && !functional_(c, i).is_zero()) out[c] += functional_(c, i) * x[i];
    return out;
  }

 private:
  const Matroid& mat_;
  std::map<IndexSet, std::size_t> index_;
  std::size_t n_ = 0, r_ = 0, p_ = 0, rank_ = 0;
  Matrix<T> functional_;
  Matrix<T> consistency_;
};

}  // namespace pfaff
