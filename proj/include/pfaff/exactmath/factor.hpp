#pragma once

#include <vector>

#include "pfaff/exactmath/poly_gcd.hpp"

namespace pfaff {

/// p = unit * prod_k factors[k]^multiplicity[k].
struct DeclaredFactorization {
  Rational unit;
  std::vector<unsigned> multiplicity;
};

/// Writes p as a constant times a product of powers of the declared factors.
/// Throws UndeclaredFactor when a non-constant cofactor remains.
inline DeclaredFactorization factor_into_declared_linears(const Poly& p, const std::vector<Poly>& factors) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  DeclaredFactorization out{Rational(1), std::vector<unsigned>(factors.size(), 0)};
  Poly rest = p;
  for (std::size_t k = 0; k < factors.size() && !rest.is_constant(); ++k) {
    if (factors[k].is_constant()) continue;
    while (true) {
      auto q = try_divide(rest, factors[k]);
      if (!q) break;
      rest = std::move(*q);
      ++out.multiplicity[k];
    }
  }
  if (!rest.is_constant())
    throw Error(ErrorCode::UndeclaredFactor, "factor " + rest.to_string() + " of " + p.to_string() +
                                                 " is not among the declared singular factors");
  out.unit = rest.constant_term();
  return out;
}

}  // namespace pfaff
