#pragma once

#include <string>
#include <vector>

#include "pfaff/dfmodels/gauge.hpp"
#include "pfaff/numverify/transport.hpp"

namespace pfaff::num {

struct Checkpoint {
  Complex z;
  double residual = 0;
};

struct OdeResidualReport {
  std::string branch;
  Complex eta, zeta;
  std::vector<Complex> path;
  std::vector<Checkpoint> checkpoints;
  double max_relative_residual = 0;
  IntegrationStats ode_stats, fuchsian_stats;
};

/// Gauge data of the third-order equation as floating-point quantities.
struct NumericGauge {
  std::string branch;
  Complex eta, zeta;
  CMatrix A, B;
};

inline CMatrix to_eigen(const models::CMatrix3& m) {
  CMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m[std::size_t(i)][std::size_t(j)];
  return out;
}

inline NumericGauge numeric_gauge(const models::GaugeData& g) {
  return {models::branch_name(g.branch), g.eta.to_complex(), g.zeta.to_complex(), to_eigen(models::to_complex(g.A)),
          to_eigen(models::to_complex(g.B))};
}

/// Gamma_1 Gamma_0 at z: f = (y, (z-1) y', eta/z y + zeta (z-1)/z y' + (z-1)^2 y'').
inline CMatrix gauge_at(const NumericGauge& g, Complex z) {
  CMatrix m = CMatrix::Zero(3, 3);
  const Complex zm = z - 1.0;
  m(0, 0) = 1.0;
  m(1, 1) = zm;
  m(2, 0) = g.eta / z;
  m(2, 1) = g.zeta * zm / z;
  m(2, 2) = zm * zm;
  return m;
}

/// Solves the third-order equation from (y, y', y'') = y0 at path.front() and
/// transports Gamma f0 with A dz/z + B dz/(z-1); reports the relative gap at
/// `per_segment` checkpoints on each path segment.
inline OdeResidualReport ode_transport_residual(const models::OdeCoefficients& k, const NumericGauge& g,
                                            const std::vector<Complex>& path, const CVector& y0,
                                            std::size_t per_segment = 10, const DopriOptions& opt = {}) {
  if (path.size() < 2) throw Error(ErrorCode::InvalidArgument, "path needs at least two points");
  if (y0.size() != 3) throw Error(ErrorCode::InvalidArgument, "initial data must be (y, y', y'')");
  const FuchsianSystem fuchs({Complex(0), Complex(-1)}, {{Complex(1)}, {Complex(1)}}, {g.A, g.B});

  OdeResidualReport rep;
  rep.branch = g.branch;
  rep.eta = g.eta;
  rep.zeta = g.zeta;
  rep.path = path;
  CVector f0 = y0;
  CVector f = gauge_at(g, path.front()) * y0;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    CVector p(1), q(1);
    p(0) = path[s];
    q(0) = path[s + 1];
    fuchs.check_segment(p, q);
    for (std::size_t j = 0; j < per_segment; ++j) {
      const Complex za = path[s] + (path[s + 1] - path[s]) * (double(j) / double(per_segment));
      const Complex zb = path[s] + (path[s + 1] - path[s]) * (double(j + 1) / double(per_segment));
      const Complex dz = zb - za;
      f0 = integrate_linear(
          [&](double tau) {
            const auto c = models::companion_at(k, za + tau * dz);
            return CMatrix(to_eigen(c) * dz);
          },
          f0, opt, rep.ode_stats);
      CVector a(1), d(1);
      a(0) = za;
      d(0) = dz;
      f = integrate_linear([&](double tau) { return fuchs.matrix(a + tau * d, d); }, f, opt, rep.fuchsian_stats);
      const CVector gf = gauge_at(g, zb) * f0;
      const double scale = std::max(f.cwiseAbs().maxCoeff(), gf.cwiseAbs().maxCoeff());
      const double r = scale == 0 ? 0.0 : (gf - f).cwiseAbs().maxCoeff() / scale;
      rep.checkpoints.push_back({zb, r});
      rep.max_relative_residual = std::max(rep.max_relative_residual, r);
    }
  }
  return rep;
}

}  // namespace pfaff::num
