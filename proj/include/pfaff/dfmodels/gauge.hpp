#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "pfaff/dfmodels/ode.hpp"

namespace pfaff::models {

/// Gauge transform of d/dz - Omega by f -> Gamma f:
/// Gamma Omega Gamma^{-1} - Gamma d/dz(Gamma^{-1}).
inline Matrix<RationalFunction> gauge_transform(const Matrix<RationalFunction>& gamma,
                                                const Matrix<RationalFunction>& omega) {
  const auto inv = inverse(gamma);
  Matrix<RationalFunction> d(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) d(i, j) = inv(i, j).derivative(ode_variable());
  return gamma * omega * inv - gamma * d;
}

inline Matrix<RationalFunction> gamma0() {
  const RationalFunction zm = RationalFunction(Poly::symbol(ode_variable())) - RationalFunction(1);
  Matrix<RationalFunction> g(3, 3);
  g(0, 0) = RationalFunction(1);
  g(1, 1) = zm;
  g(2, 2) = zm * zm;
  return g;
}

/// Lower triangular gauge with (eta/z, zeta/z, 1) in the last row.
inline Matrix<RationalFunction> gamma1(const RationalFunction& eta, const RationalFunction& zeta) {
  const RationalFunction z(Poly::symbol(ode_variable()));
  auto g = Matrix<RationalFunction>::identity(3);
  g(2, 0) = eta / z;
  g(2, 1) = zeta / z;
  return g;
}

/// Residue matrices of the Fuchsian system at z = 0 (A) and z = 1 (B).
template <class T>
std::pair<Matrix<T>, Matrix<T>> fuchsian_residues(const T& K1, const T& K2, const T& L1, const T& L2, const T& L3,
                                               const T& M1, const T& M2, const T& eta, const T& zeta) {
  const T one(1), two(2);
  Matrix<T> a(3, 3), b(3, 3);
  a(1, 0) = eta;
  a(1, 1) = zeta;
  a(2, 0) = -M1 - M2 + (zeta + two - K1) * eta;
  a(2, 1) = -eta - L2 - L3 + zeta * zeta + (one - K1) * zeta;
  a(2, 2) = -zeta - K2;
  b(0, 1) = one;
  b(1, 0) = -eta;
  b(1, 1) = one - zeta;
  b(1, 2) = one;
  b(2, 0) = (K1 - zeta - two) * eta;
  b(2, 1) = eta - L1 - zeta * zeta - (one - K1) * zeta;
  b(2, 2) = two + zeta - K1;
  return {a, b};
}

struct GaugeSymbolicCheck {
  bool residues_match = false;
  bool determinant_matches = false;
  std::string determinant;
  Matrix<RationalFunction> omega1, omega2;
};

/// Treats K1..M2, eta, zeta as free symbols, applies both gauges to the
/// companion system and compares with A/z + B/(z-1) after eliminating L2 and M2
/// through the two defining equations of eta and zeta. Also checks
/// det(Gamma_1 Gamma_0) = (z-1)^3.
inline GaugeSymbolicCheck verify_gauge_symbolic() {
  auto W = [](const char* n) { return Poly::symbol(Symbol::weight(n)); };
  const OdeCoefficients k{W("K1"), W("K2"), W("L1"), W("L2"), W("L3"), W("M1"), W("M2")};
  const Poly eta = W("eta"), zeta = W("zeta");
  const RationalFunction z(Poly::symbol(ode_variable()));
  const RationalFunction zm = z - RationalFunction(1);

  GaugeSymbolicCheck out;
  out.omega1 = gauge_transform(gamma0(), companion_system(k));
  out.omega2 = gauge_transform(gamma1(RationalFunction(eta), RationalFunction(zeta)), out.omega1);

  auto R = [](const Poly& p) { return RationalFunction(p); };
  const auto [a, b] = fuchsian_residues(R(k.K1), R(k.K2), R(k.L1), R(k.L2), R(k.L3), R(k.M1), R(k.M2), R(eta), R(zeta));
  const std::map<Symbol, Poly> elim{
      {Symbol::weight("L2"), -(zeta * k.K2 + zeta * zeta - zeta)},
      {Symbol::weight("M2"), -(eta * zeta + eta * k.K2 - eta)},
  };
  bool match = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const RationalFunction want = a(i, j) / z + b(i, j) / zm;
      match = match && out.omega2(i, j).substitute(elim) == want.substitute(elim);
    }
  out.residues_match = match;
  const RationalFunction det = determinant(gamma1(R(eta), R(zeta)) * gamma0());
  out.determinant = det.to_string();
  out.determinant_matches = det == zm * zm * zm;
  return out;
}

enum class GaugeBranch { Plus, Minus };

inline GaugeBranch parse_branch(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1") return GaugeBranch::Plus;
  if (s == "-" || s == "minus" || s == "2") return GaugeBranch::Minus;
  throw Error(ErrorCode::InvalidArgument, "branch must be '+' or '-', got '" + s + "'");
}

inline const char* branch_name(GaugeBranch b) { return b == GaugeBranch::Plus ? "+" : "-"; }

struct GaugeData {
  OdeCoefficients coeffs;
  GaugeBranch branch = GaugeBranch::Plus;
  /// (K2 - 1)^2 - 4 L2; zeta lives in Q(sqrt discriminant).
  Rational discriminant;
  QuadraticNumber zeta, eta;
  /// L2 + zeta K2 + zeta^2 - zeta and M2 + eta zeta + eta K2 - eta.
  QuadraticNumber zeta_residual, eta_residual;
  Matrix<QuadraticNumber> A, B;
};

/// zeta = (1 - K2 +- sqrt(D)) / 2 and eta = -M2 / (zeta + K2 - 1), computed
/// exactly in Q(sqrt D). The "+" branch has the larger real part (larger
/// imaginary part when D < 0).
inline GaugeData gauge_pipeline(const OdeCoefficients& k, GaugeBranch branch = GaugeBranch::Plus) {
  if (!k.is_numeric()) throw Error(ErrorCode::InvalidArgument, "gauge_pipeline needs evaluated coefficients");
  auto v = [](const Poly& p) { return QuadraticNumber(p.constant_value()); };
  const QuadraticNumber K1 = v(k.K1), K2 = v(k.K2), L1 = v(k.L1), L2 = v(k.L2), L3 = v(k.L3), M1 = v(k.M1), M2 = v(k.M2);
  GaugeData out;
  out.coeffs = k;
  out.branch = branch;
  const Rational km1 = k.K2.constant_value() - Rational(1);
  out.discriminant = km1 * km1 - Rational(4) * k.L2.constant_value();
  const Rational half(1, 2);
  const QuadraticNumber root = QuadraticNumber::sqrt(out.discriminant);
  out.zeta = QuadraticNumber(-km1 * half) + (branch == GaugeBranch::Plus ? root : -root) * QuadraticNumber(half);
  const QuadraticNumber denom = out.zeta + K2 - QuadraticNumber(Rational(1));
  if (denom.is_zero()) {
    if (!M2.is_zero())
      throw Error(ErrorCode::DegenerateGauge, std::string("zeta + K2 - 1 = 0 with M2 != 0 on branch ") +
                                                  branch_name(branch) + ": no eta exists");
    out.eta = QuadraticNumber(Rational(0));
  } else {
    out.eta = -M2 / denom;
  }
  out.zeta_residual = L2 + out.zeta * K2 + out.zeta * out.zeta - out.zeta;
  out.eta_residual = M2 + out.eta * out.zeta + out.eta * K2 - out.eta;
  std::tie(out.A, out.B) = fuchsian_residues(K1, K2, L1, L2, L3, M1, M2, out.eta, out.zeta);
  return out;
}

inline CMatrix3 to_complex(const Matrix<QuadraticNumber>& m) {
  CMatrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = m(i, j).to_complex();
  return out;
}

inline nlohmann::ordered_json gauge_to_json(const GaugeData& g) {
  using J = nlohmann::ordered_json;
  auto mat = [](const auto& m) {
    J rows = J::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      J row = J::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(row);
    }
    return rows;
  };
  J j;
  J c;
  for (const auto& [name, p] : g.coeffs.named()) c[name] = p->to_string();
  j["coefficients"] = c;
  j["branch"] = branch_name(g.branch);
  j["discriminant"] = g.discriminant.to_string();
  j["zeta"] = g.zeta.to_string();
  j["eta"] = g.eta.to_string();
  j["zeta_residual"] = g.zeta_residual.to_string();
  j["eta_residual"] = g.eta_residual.to_string();
  j["gamma0"] = mat(gamma0());
  j["gamma1"] = mat(gamma1(RationalFunction(Poly::symbol(Symbol::weight("eta"))),
                           RationalFunction(Poly::symbol(Symbol::weight("zeta")))));
  j["A"] = mat(g.A);
  j["B"] = mat(g.B);
  return j;
}

}  // namespace pfaff::models
