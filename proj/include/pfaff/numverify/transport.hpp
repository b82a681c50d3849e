#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "pfaff/numverify/solutions.hpp"

namespace pfaff::num {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct DopriOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = 1e-2;
  std::size_t max_steps = 200000;
};

struct IntegrationStats {
  std::size_t accepted = 0, rejected = 0;
};

/// Dormand-Prince 5(4) for the linear system dy/dtau = M(tau) y on [0, 1].
inline CVector integrate_linear(const std::function<CMatrix(double)>& m, CVector y, const DopriOptions& opt,
                                IntegrationStats& stats) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  double t = 0, h = opt.initial_step;
  CVector k1 = m(0) * y;
  while (t < 1.0) {
    if (stats.accepted + stats.rejected >= opt.max_steps)
      throw Error(ErrorCode::ToleranceNotMet, "transport exceeded its step budget");
    h = std::min(h, 1.0 - t);
    const CVector k2 = m(t + c2 * h) * (y + h * a21 * k1);
    const CVector k3 = m(t + c3 * h) * (y + h * (a31 * k1 + a32 * k2));
    const CVector k4 = m(t + c4 * h) * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const CVector k5 = m(t + c5 * h) * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const CVector k6 = m(t + h) * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const CVector next = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const CVector k7 = m(t + h) * next;
    const CVector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double en = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y(i)), std::abs(next(i)));
      en = std::max(en, std::abs(err(i)) / sc);
    }
    if (en <= 1.0) {
      t = (1.0 - t <= h) ? 1.0 : t + h;
      y = next;
      k1 = k7;
      ++stats.accepted;
    } else {
      ++stats.rejected;
    }
    const double factor = en == 0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < 1e-14) throw Error(ErrorCode::ToleranceNotMet, "transport step size underflow");
  }
  return y;
}

/// d f = (sum_k A_k dlog L_k) f with affine L_k, evaluated at complex points.
class FuchsianSystem {
 public:
  FuchsianSystem() = default;

  /// L_k(x) = constants[k] + gradients[k] . x
  FuchsianSystem(std::vector<Complex> constants, std::vector<std::vector<Complex>> gradients, std::vector<CMatrix> residues)
      : constants_(std::move(constants)), gradients_(std::move(gradients)), residues_(std::move(residues)) {}

  static FuchsianSystem from(const OmegaEvaluator& om) {
    std::map<Symbol, Rational> zero;
    for (const auto& s : om.base_vars()) zero[s] = Rational(0);
    FuchsianSystem f;
    for (std::size_t k = 0; k < om.factors().size(); ++k) {
      const Poly& l = om.factors()[k];
      if (l.degree() > 1) throw Error(ErrorCode::InvalidArgument, "transport needs affine factors");
      f.constants_.emplace_back(l.value_at(zero).to_double());
      std::vector<Complex> g;
      for (const auto& s : om.base_vars()) g.emplace_back(l.derivative(s).value_at(zero).to_double());
      f.gradients_.push_back(std::move(g));
      f.residues_.push_back(om.residues()[k].cast<Complex>());
    }
    return f;
  }

  [[nodiscard]] std::size_t factors() const { return constants_.size(); }
  [[nodiscard]] Eigen::Index size() const { return residues_.empty() ? 0 : residues_[0].rows(); }

  [[nodiscard]] Complex factor(std::size_t k, const CVector& x) const {
    Complex v = constants_[k];
    for (std::size_t j = 0; j < gradients_[k].size(); ++j) v += gradients_[k][j] * x(Eigen::Index(j));
    return v;
  }

  /// Omega(x) applied to the tangent vector dx.
  [[nodiscard]] CMatrix matrix(const CVector& x, const CVector& dx) const {
    CMatrix out = CMatrix::Zero(size(), size());
    for (std::size_t k = 0; k < factors(); ++k) {
      Complex d = 0;
      for (std::size_t j = 0; j < gradients_[k].size(); ++j) d += gradients_[k][j] * dx(Eigen::Index(j));
      if (d != Complex(0)) out += (d / factor(k, x)) * residues_[k];
    }
    return out;
  }

  /// Throws PATH_HITS_SINGULARITY if some L_k comes within rel_gap of zero on the segment.
  void check_segment(const CVector& p, const CVector& q, double rel_gap = 1e-9) const {
    for (std::size_t k = 0; k < factors(); ++k) {
      const Complex a = factor(k, p), b = factor(k, q);
      const Complex d = b - a;
      double tau = 0;
      if (std::norm(d) > 0) tau = std::clamp(-std::real(std::conj(d) * a) / std::norm(d), 0.0, 1.0);
      const double gap = std::abs(a + tau * d);
      if (gap <= rel_gap * (std::abs(a) + std::abs(b) + 1.0))
        throw Error(ErrorCode::PathHitsSingularity, "path segment meets the zero set of factor " + std::to_string(k));
    }
  }

 private:
  std::vector<Complex> constants_;
  std::vector<std::vector<Complex>> gradients_;
  std::vector<CMatrix> residues_;
};

struct TransportResult {
  CVector value;
  IntegrationStats stats;
};

/// Solution of d f = Omega f along a polyline, starting from f0 at path.front().
inline TransportResult transport(const FuchsianSystem& sys, CVector f0, const std::vector<CVector>& path,
                                 const DopriOptions& opt = {}) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  if (f0.size() != sys.size()) throw Error(ErrorCode::InvalidArgument, "initial vector has the wrong length");
  TransportResult r;
  r.value = std::move(f0);
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const CVector& p = path[s];
    const CVector dx = path[s + 1] - p;
    if (dx.norm() == 0) continue;
    sys.check_segment(p, path[s + 1]);
    r.value = integrate_linear([&](double tau) { return sys.matrix(p + tau * dx, dx); }, r.value, opt, r.stats);
  }
  return r;
}

inline std::vector<CVector> reversed(std::vector<CVector> path) {
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace pfaff::num
