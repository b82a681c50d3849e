#pragma once

#include <string>
#include <vector>

#include "pfaff/numverify/solutions.hpp"

namespace pfaff::num {

struct DirectionResidual {
  std::string variable;
  double residual = 0;
  /// max(|central difference|, |Omega_i f|) in the worst chamber.
  double scale = 0;
};

struct ResidualReport {
  std::string family;
  std::map<Symbol, Rational> weights, point;
  Rational h;
  double tol = 0;
  double max_relative_residual = 0;
  std::vector<DirectionResidual> directions;
  std::size_t chambers = 0;
  double quadrature_error = 0;
  /// tol <= 1e-3 h^2, the coupling under which quadrature noise stays below the difference error.
  bool meaningful = false;
};

struct PfaffianOptions {
  QuadratureOptions quadrature;
  /// Replace Omega by zero; the residual then measures |df| and must be large.
  bool zero_omega = false;
};

namespace detail {

inline std::map<Symbol, Rational> shifted(std::map<Symbol, Rational> p, const Symbol& s, const Rational& d) {
  p[s] += d;
  return p;
}

inline double norm_inf(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace detail

/// Central differences of the chamber solutions against Omega f, direction by direction,
/// with the quadrature level of each chamber frozen at its value at the centre.
inline ResidualReport pfaffian_residual(const SolutionBuilder& sol, const ConnectionForm& omega,
                                        const std::map<Symbol, Rational>& weights,
                                        const std::map<Symbol, Rational>& point, const Rational& h,
                                        const PfaffianOptions& opt = {}) {
  if (h.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "step h must be positive");
  const OmegaEvaluator om(omega, weights);
  ResidualReport rep;
  rep.family = sol.family().name;
  rep.weights = weights;
  rep.point = point;
  rep.h = h;
  rep.tol = opt.quadrature.tol;
  const double hd = h.to_double();
  rep.meaningful = opt.quadrature.tol <= 1e-3 * hd * hd * (1 + 1e-9);

  const auto centre = sol.solve(point, opt.quadrature);
  const auto levels = levels_of(centre);
  rep.chambers = centre.size();
  for (const auto& [k, c] : centre) rep.quadrature_error = std::max(rep.quadrature_error, c.error);

  auto vec = [](const std::vector<double>& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), Eigen::Index(v.size())); };
  for (std::size_t i = 0; i < omega.base_vars.size(); ++i) {
    const Symbol& s = omega.base_vars[i];
    const auto plus = sol.solve(detail::shifted(point, s, h), opt.quadrature, &levels);
    const auto minus = sol.solve(detail::shifted(point, s, -h), opt.quadrature, &levels);
    const Eigen::MatrixXd m = opt.zero_omega ? Eigen::MatrixXd::Zero(Eigen::Index(om.size()), Eigen::Index(om.size()))
                                             : om.direction(i, point);
    DirectionResidual d{s.name(), 0, 0};
    for (const auto& [key, c] : centre) {
      const Eigen::VectorXd diff = (vec(plus.at(key).values) - vec(minus.at(key).values)) / (2 * hd);
      const Eigen::VectorXd rhs = m * vec(c.values);
      const double scale = std::max(detail::norm_inf(diff), detail::norm_inf(rhs));
      const double r = scale == 0 ? 0 : detail::norm_inf(diff - rhs) / scale;
      if (r >= d.residual) {
        d.residual = r;
        d.scale = scale;
      }
    }
    rep.max_relative_residual = std::max(rep.max_relative_residual, d.residual);
    rep.directions.push_back(d);
  }
  return rep;
}

struct RichardsonReport {
  ResidualReport coarse, fine;
  /// coarse / fine residual; close to 4 for a second-order difference.
  double ratio = 0;
};

inline RichardsonReport richardson(const SolutionBuilder& sol, const ConnectionForm& omega,
                                   const std::map<Symbol, Rational>& weights, const std::map<Symbol, Rational>& point,
                                   const Rational& h, const PfaffianOptions& opt = {}) {
  RichardsonReport r;
  r.coarse = pfaffian_residual(sol, omega, weights, point, h, opt);
  r.fine = pfaffian_residual(sol, omega, weights, point, h / Rational(2), opt);
  r.ratio = r.fine.max_relative_residual == 0 ? 0 : r.coarse.max_relative_residual / r.fine.max_relative_residual;
  return r;
}

}  // namespace pfaff::num
