#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pfaff/arrangement/family.hpp"

namespace pfaff {

/// (m+1) x (l+1) coefficient matrix: column i < l holds hyperplane i with its
/// constant term in row 0 and t-coefficients in rows 1..m; column l is e_0.
struct TMatrix {
  std::vector<std::vector<Poly>> entries;

  [[nodiscard]] std::size_t rows() const { return entries.size(); }
  [[nodiscard]] std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  [[nodiscard]] std::size_t extra() const { return cols() - 1; }
  [[nodiscard]] const Poly& operator()(std::size_t r, std::size_t c) const { return entries[r][c]; }
};

inline TMatrix t_matrix(const ArrangementFamily& fam) {
  const std::size_t m = fam.fiber_dim(), l = fam.size();
  TMatrix t{std::vector<std::vector<Poly>>(m + 1, std::vector<Poly>(l + 1))};
  for (std::size_t i = 0; i < l; ++i) {
    t.entries[0][i] = fam.hyperplanes[i].constant;
    for (std::size_t j = 0; j < m; ++j) t.entries[j + 1][i] = fam.hyperplanes[i].t_coefficients[j];
  }
  t.entries[0][l] = Poly(1);
  return t;
}

/// Determinant of the square submatrix on the given columns, in the given order.
inline Poly delta(const std::vector<std::size_t>& cols, const TMatrix& t) {
  if (cols.size() != t.rows()) throw Error(ErrorCode::InvalidArgument, "delta needs exactly m+1 columns");
  std::vector<std::vector<Poly>> sub(t.rows(), std::vector<Poly>(cols.size()));
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = t(r, cols[c]);
  return laplace_determinant(sub);
}

}  // namespace pfaff
