#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pfaff/dfmodels/pde.hpp"
#include "pfaff/numverify/solutions.hpp"

namespace pfaff::num {

struct OperatorResidual {
  std::string name;
  double residual = 0;
  /// sum_alpha |c_alpha D^alpha J| in the worst chamber.
  double scale = 0;
};

struct PdeResidualReport {
  std::string family;
  std::map<Symbol, Rational> weights, point;
  Rational h;
  double tol = 0;
  std::size_t chambers = 0;
  std::vector<OperatorResidual> operators;
  double max_relative_residual = 0;
};

namespace detail {

/// Second-order central difference weights for d^m/dx^m at offsets -2..2, without 1/h^m.
inline std::array<double, 5> central_weights(unsigned m) {
  switch (m) {
    case 0: return {0, 0, 1, 0, 0};
    case 1: return {0, -0.5, 0, 0.5, 0};
    case 2: return {0, 1, -2, 1, 0};
    case 3: return {-0.5, 1, 0, -1, 0.5};
    default: throw Error(ErrorCode::InvalidArgument, "difference stencils cover derivatives up to order 3");
  }
}

}  // namespace detail

/// Applies each two-variable operator to chamber integrals of |Phi| dt ds,
/// with derivatives from tensor central differences of step h. The residual of
/// an operator is |sum c_alpha D^alpha J| / sum |c_alpha D^alpha J|, maximised over chambers.
inline PdeResidualReport pde_residual(const std::vector<models::PdeOperator>& ops,
                                      const std::vector<std::string>& names, const SolutionBuilder& sol,
                                      const std::map<Symbol, Rational>& weights,
                                      const std::map<Symbol, Rational>& point, const Rational& h,
                                      const QuadratureOptions& opt = {}) {
  if (ops.empty()) throw Error(ErrorCode::InvalidArgument, "no operators given");
  const auto& vars = ops.front().vars();
  if (vars.size() != 2) throw Error(ErrorCode::UnsupportedDimension, "numeric PDE checks cover two variables");
  for (const auto& op : ops)
    for (const auto& [a, c] : op.terms())
      if (a[0] + a[1] > 3) throw Error(ErrorCode::InvalidArgument, "operator order above the stencil range");

  PdeResidualReport rep;
  rep.family = sol.family().name;
  rep.weights = weights;
  rep.point = point;
  rep.h = h;
  rep.tol = opt.tol;

  // The operators are written in x1, x2; the family may name its base differently.
  const auto& base = sol.family().base_vars;
  if (base.size() != 2) throw Error(ErrorCode::UnsupportedDimension, "family base must be two-dimensional");
  const auto centre = sol.solve(point, opt);
  const auto levels = levels_of(centre);
  rep.chambers = centre.size();

  std::map<std::pair<int, int>, SolutionSet> grid;
  auto at = [&](int i, int j) -> const SolutionSet& {
    auto it = grid.find({i, j});
    if (it != grid.end()) return it->second;
    auto p = point;
    p[base[0]] += h * Rational(i);
    p[base[1]] += h * Rational(j);
    return grid.emplace(std::pair{i, j}, sol.solve(p, opt, &levels)).first->second;
  };

  std::map<Symbol, double> values;
  for (const auto& [s, v] : weights) values[s] = v.to_double();
  values[vars[0]] = point.at(base[0]).to_double();
  values[vars[1]] = point.at(base[1]).to_double();
  const double hd = h.to_double();

  for (std::size_t o = 0; o < ops.size(); ++o) {
    OperatorResidual r{o < names.size() ? names[o] : "P" + std::to_string(o + 1), 0, 0};
    for (const auto& [key, c] : centre) {
      auto derivative = [&](const models::MultiIndex& a) {
        const auto wx = detail::central_weights(a[0]);
        const auto wy = detail::central_weights(a[1]);
        double acc = 0;
        for (int i = -2; i <= 2; ++i)
          for (int j = -2; j <= 2; ++j) {
            const double w = wx[std::size_t(i + 2)] * wy[std::size_t(j + 2)];
            if (w != 0) acc += w * at(i, j).at(key).values[0];
          }
        return acc / std::pow(hd, double(a[0] + a[1]));
      };
      double sum = 0, scale = 0;
      for (const auto& [a, coef] : ops[o].terms()) {
        const double t = coef.value_at(values) * derivative(a);
        sum += t;
        scale += std::abs(t);
      }
      const double res = scale == 0 ? 0 : std::abs(sum) / scale;
      if (res >= r.residual) {
        r.residual = res;
        r.scale = scale;
      }
    }
    rep.max_relative_residual = std::max(rep.max_relative_residual, r.residual);
    rep.operators.push_back(r);
  }
  return rep;
}

}  // namespace pfaff::num
