#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "pfaff/exactmath.hpp"

namespace pfaff::models {

/// Coefficients of the third-order equation
///   y''' + (K1 z + K2 (z-1)) / (z (z-1)) y'' + (L1 z^2 + L2 (z-1)^2 + L3 z (z-1)) / (z^2 (z-1)^2) y'
///        + (M1 z + M2 (z-1)) / (z^2 (z-1)^2) y = 0.
/// Entries are polynomials in the weights a, b, c, g, or constants once evaluated.
struct OdeCoefficients {
  Poly K1, K2, L1, L2, L3, M1, M2;

  [[nodiscard]] std::vector<std::pair<std::string, const Poly*>> named() const {
    return {{"K1", &K1}, {"K2", &K2}, {"L1", &L1}, {"L2", &L2}, {"L3", &L3}, {"M1", &M1}, {"M2", &M2}};
  }

  [[nodiscard]] OdeCoefficients evaluate(const std::map<Symbol, Rational>& values) const {
    return {K1.evaluate(values), K2.evaluate(values), L1.evaluate(values), L2.evaluate(values),
            L3.evaluate(values), M1.evaluate(values), M2.evaluate(values)};
  }

  [[nodiscard]] bool is_numeric() const {
    for (const auto& [n, p] : named())
      if (!p->is_constant()) return false;
    return true;
  }
};

inline Symbol ode_variable() { return Symbol::base("z"); }

inline OdeCoefficients ode_coefficients() {
  const Poly a = Poly::symbol(Symbol::weight("a")), b = Poly::symbol(Symbol::weight("b"));
  const Poly c = Poly::symbol(Symbol::weight("c")), g = Poly::symbol(Symbol::weight("g"));
  const Poly one(1), two(2), three(3);
  OdeCoefficients k;
  k.K1 = -(three * b + three * c + g);
  k.K2 = -(three * a + three * c + g);
  k.L1 = (b + c) * (one + two * b + two * c + g);
  k.L2 = (a + c) * (one + two * a + two * c + g);
  k.L3 = (b + c) * (one + two * a + two * c + g) + (a + c) * (one + two * b + two * c + g) + (c - one) * (a + b + c) +
         (three * c + g) * (one + a + b + c + g);
  k.M1 = -c * (two + two * a + two * b + two * c + g) * (one + two * b + two * c + g);
  k.M2 = -c * (two + two * a + two * b + two * c + g) * (one + two * a + two * c + g);
  return k;
}

inline std::map<Symbol, Rational> ode_weights(const Rational& a, const Rational& b, const Rational& c, const Rational& g) {
  return {{Symbol::weight("a"), a}, {Symbol::weight("b"), b}, {Symbol::weight("c"), c}, {Symbol::weight("g"), g}};
}

/// Companion matrix Omega_0(z) of the first-order system df_0/dz = Omega_0 f_0, f_0 = (y, y', y'').
inline Matrix<RationalFunction> companion_system(const OdeCoefficients& k) {
  const RationalFunction z(Poly::symbol(ode_variable()));
  const RationalFunction zm = z - RationalFunction(1);
  auto R = [](const Poly& p) { return RationalFunction(p); };
  Matrix<RationalFunction> m(3, 3);
  m(0, 1) = RationalFunction(1);
  m(1, 2) = RationalFunction(1);
  m(2, 0) = -R(k.M1) / (z * zm * zm) - R(k.M2) / (z * z * zm);
  m(2, 1) = -R(k.L1) / (zm * zm) - R(k.L2) / (z * z) - R(k.L3) / (z * zm);
  m(2, 2) = -R(k.K1) / zm - R(k.K2) / z;
  return m;
}

using Complex = std::complex<double>;
using CMatrix3 = std::array<std::array<Complex, 3>, 3>;

/// Numeric companion matrix at a point z away from 0 and 1.
inline CMatrix3 companion_at(const OdeCoefficients& k, Complex z) {
  if (!k.is_numeric()) throw Error(ErrorCode::InvalidArgument, "companion_at needs evaluated coefficients");
  if (std::abs(z) == 0.0 || std::abs(z - 1.0) == 0.0)
    throw Error(ErrorCode::SingularPoint, "the equation is singular at z = 0 and z = 1");
  auto v = [](const Poly& p) { return p.constant_value().to_double(); };
  const Complex zm = z - 1.0;
  CMatrix3 m{};
  m[0][1] = 1.0;
  m[1][2] = 1.0;
  m[2][0] = -v(k.M1) / (z * zm * zm) - v(k.M2) / (z * z * zm);
  m[2][1] = -v(k.L1) / (zm * zm) - v(k.L2) / (z * z) - v(k.L3) / (z * zm);
  m[2][2] = -v(k.K1) / zm - v(k.K2) / z;
  return m;
}

}  // namespace pfaff::models
