#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pfaff/arrangement/matroid.hpp"
#include "pfaff/gaussmanin/tmatrix.hpp"

namespace pfaff {

/// One summand  multiplier * lambda_j * dlog(L_factor) wedge omega_tuple.
struct NablaTerm {
  std::size_t factor;
  std::size_t hyperplane;
  long multiplier;
  IndexSet tuple;
};

/// Expansion of the x-covariant derivative of omega_S (|S| = m) in top
/// cohomology:
///   nabla' omega_S ~ (-1)^m sum_{j not in S} lambda_j sum_{k=1}^{m+1} (-1)^{k+1}
///       dlog( Delta_{(S,j)} / Delta_{((S,j)_k, e)} ) wedge omega_{(S,j)_k},
/// where e is the extra column of the T matrix. A summand whose omega vanishes
/// (Delta_{((S,j)_k, e)} = 0) is dropped, as is dlog Delta_{(S,j)} when that
/// determinant vanishes identically. Determinants are factored over the
/// declared singular factors.
class NablaExpander {
 public:
  explicit NablaExpander(const ArrangementFamily& fam) : fam_(fam), t_(t_matrix(fam)) {}

  [[nodiscard]] const TMatrix& t() const { return t_; }

  [[nodiscard]] std::vector<NablaTerm> expand(const IndexSet& s) {
    const std::size_t m = fam_.fiber_dim();
    if (s.size() != m) throw Error(ErrorCode::InvalidArgument, "nabla expansion needs an m-tuple");
    std::vector<NablaTerm> out;
    const long global = (m % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j < fam_.size(); ++j) {
      if (std::find(s.begin(), s.end(), j) != s.end()) continue;
      IndexSet sj = s;
      sj.push_back(j);
      const auto& top = factorization(sj);
      for (std::size_t k = 0; k <= m; ++k) {
        IndexSet u = sj;
        u.erase(u.begin() + static_cast<long>(k));
        IndexSet ue = u;
        ue.push_back(t_.extra());
        const auto& low = factorization(ue);
        if (!low) continue;
        const long sign = global * ((k % 2 == 0) ? 1 : -1);
        for (std::size_t f = 0; f < fam_.declared_factors.size(); ++f) {
          long mult = -static_cast<long>(low->multiplicity[f]);
          if (top) mult += static_cast<long>(top->multiplicity[f]);
          if (mult != 0) out.push_back({f, j, sign * mult, u});
        }
      }
    }
    return out;
  }

 private:
  /// Factorization of Delta on the given columns (order irrelevant for dlog);
  /// std::nullopt when the determinant vanishes identically.
  const std::optional<DeclaredFactorization>& factorization(const IndexSet& cols) {
    IndexSet key = cols;
    std::sort(key.begin(), key.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<DeclaredFactorization> f;
    const bool repeated = std::adjacent_find(key.begin(), key.end()) != key.end();
    if (!repeated) {
      const Poly d = delta(key, t_);
      if (!d.is_zero()) f = factor_into_declared_linears(d, fam_.declared_factors);
    }
    return cache_.emplace(std::move(key), std::move(f)).first->second;
  }

  const ArrangementFamily& fam_;
  TMatrix t_;
  std::map<IndexSet, std::optional<DeclaredFactorization>> cache_;
};

}  // namespace pfaff
