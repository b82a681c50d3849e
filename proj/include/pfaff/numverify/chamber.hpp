#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pfaff/arrangement.hpp"
#include "pfaff/numverify/quadrature.hpp"

namespace pfaff::num {

/// coef * det(dalpha_k, dalpha_l) / (alpha_k alpha_l) dt ds, or coef dt ds when k < 0.
struct DensityTerm {
  double coef = 0;
  int k = -1, l = -1;
};

/// A top-degree form on the fiber, integrated against |Phi| = prod |alpha_k|^lambda_k.
using Density = std::vector<DensityTerm>;

inline Density volume_density() { return {DensityTerm{1.0, -1, -1}}; }

/// Density of an Orlik-Solomon element of degree 2 on a planar fiber.
template <class T>
Density density_from_os(const OSElement<T>& e, const Fiber& fib) {
  Density d;
  for (const auto& [tuple, c] : e.terms()) {
    if (tuple.size() != 2) throw Error(ErrorCode::UnsupportedDimension, "density needs a degree-2 element");
    const auto& a = fib.hyperplanes[tuple[0]].t;
    const auto& b = fib.hyperplanes[tuple[1]].t;
    const Rational det = a[0] * b[1] - a[1] * b[0];
    if constexpr (std::is_same_v<T, Rational>) d.push_back({(c * det).to_double(), int(tuple[0]), int(tuple[1])});
    else d.push_back({c * det.to_double(), int(tuple[0]), int(tuple[1])});
  }
  return d;
}

struct QuadratureOptions {
  /// Relative tolerance on the max-norm of the chamber vector.
  double tol = 1e-9;
  int min_level = 3;
  int max_level = 7;
  /// Use exactly this tanh-sinh level (no convergence test) when >= 0.
  int fixed_level = -1;
};

struct ChamberIntegral {
  std::vector<double> values;
  double error = 0;
  int level = 0;
  std::size_t evaluations = 0;
};

namespace detail {

inline Point2 midpoint(const Point2& a, const Point2& b) {
  return {(a[0] + b[0]) / Rational(2), (a[1] + b[1]) / Rational(2)};
}

inline Point2 centroid(const std::vector<Point2>& v) {
  Point2 c{Rational(0), Rational(0)};
  for (const auto& p : v) {
    c[0] += p[0];
    c[1] += p[1];
  }
  const Rational n(static_cast<long>(v.size()));
  return {c[0] / n, c[1] / n};
}

inline Rational form_at(const AffineForm& f, const Point2& p) { return f.constant + f.t[0] * p[0] + f.t[1] * p[1]; }

/// Effective exponent of alpha_k in |Phi| * density: lambda_k minus one if any
/// term divides by alpha_k.
inline std::vector<double> effective_exponents(const std::vector<double>& lambda, const std::vector<Density>& forms) {
  std::vector<double> e = lambda;
  std::vector<bool> divides(lambda.size(), false);
  for (const auto& d : forms)
    for (const auto& t : d)
      if (t.k >= 0) divides[std::size_t(t.k)] = divides[std::size_t(t.l)] = true;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (divides[k]) e[k] -= 1.0;
  return e;
}

/// Checks local integrability along the edges and at the vertices; returns
/// the smallest margin, which drives the tanh-sinh truncation.
inline double convergence_margin(const Fiber& fib, const Chamber2D& ch, const std::vector<double>& e) {
  double margin = 1.0;
  const std::size_t n = ch.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = ch.edge_lines[i];
    if (!(e[k] > -1.0))
      throw Error(ErrorCode::NonconvergentExponent,
                  "exponent " + std::to_string(e[k]) + " along hyperplane " + std::to_string(k) + " is not > -1");
    margin = std::min(margin, e[k] + 1.0);
    double sum = 0;
    for (std::size_t j = 0; j < fib.size(); ++j)
      if (form_at(fib.hyperplanes[j], ch.vertices[i]).is_zero()) sum += e[j];
    if (!(sum > -2.0))
      throw Error(ErrorCode::NonconvergentExponent, "integrand is not integrable at a chamber vertex");
    margin = std::min(margin, sum + 2.0);
  }
  return margin;
}

/// Affine data of one triangle (apex, p1, p2) in barycentric form.
struct Triangle {
  std::vector<std::array<double, 3>> alpha;  // |alpha_k| at apex, p1, p2
  std::vector<double> sign;                  // sign of alpha_k on the chamber
  double jacobian = 0;                       // |det(p1 - apex, p2 - apex)|
};

inline Triangle make_triangle(const Fiber& fib, const Point2& apex, const Point2& p1, const Point2& p2,
                              const std::vector<double>& sign) {
  Triangle t;
  t.sign = sign;
  for (const auto& h : fib.hyperplanes)
    t.alpha.push_back({form_at(h, apex).abs().to_double(), form_at(h, p1).abs().to_double(),
                       form_at(h, p2).abs().to_double()});
  const Rational det = (p1[0] - apex[0]) * (p2[1] - apex[1]) - (p1[1] - apex[1]) * (p2[0] - apex[0]);
  t.jacobian = det.abs().to_double();
  return t;
}

/// Evaluates |Phi| times each density at barycentric coordinates (b0, b1, b2),
/// scaled by the given Jacobian factor.
class DensityEvaluator {
 public:
  DensityEvaluator(const Fiber& fib, const std::vector<double>& lambda, const std::vector<Density>& forms)
      : lambda_(lambda), forms_(forms), alpha_(lambda.size()) {
    if (lambda.size() != fib.size()) throw Error(ErrorCode::InvalidArgument, "one exponent per hyperplane expected");
  }

  bool operator()(const Triangle& tri, double b0, double b1, double b2, double scale, std::vector<double>& out) {
    double log_phi = 0;
    for (std::size_t k = 0; k < lambda_.size(); ++k) {
      const auto& a = tri.alpha[k];
      const double v = b0 * a[0] + b1 * a[1] + b2 * a[2];
      if (v == 0.0) return false;
      alpha_[k] = tri.sign[k] * v;
      if (lambda_[k] != 0.0) log_phi += lambda_[k] * std::log(v);
    }
    const double phi = std::exp(log_phi) * scale;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      double s = 0;
      for (const auto& t : forms_[i]) s += t.k < 0 ? t.coef : t.coef / (alpha_[std::size_t(t.k)] * alpha_[std::size_t(t.l)]);
      out[i] = phi * s;
    }
    return true;
  }

 private:
  std::vector<double> lambda_;
  std::vector<Density> forms_;
  std::vector<double> alpha_;
};

inline std::vector<double> chamber_signs(const Fiber& fib, const Chamber2D& ch) {
  const Point2 c = centroid(ch.vertices);
  std::vector<double> s;
  for (const auto& h : fib.hyperplanes) s.push_back(form_at(h, c).sign() >= 0 ? 1.0 : -1.0);
  return s;
}

}  // namespace detail

/// Integrals of |Phi| * density over a bounded chamber, one value per density.
/// The chamber is fanned from its centroid; each fan triangle is split at the
/// midpoint of its outer edge into two triangles with apex at a chamber vertex,
/// mapped from the unit square by (r, w) -> (1-r) apex + r(1-w) mid + r w centroid,
/// and integrated with a tensor tanh-sinh rule. Errors add across triangles.
inline ChamberIntegral integrate_chamber(const Fiber& fib, const Chamber2D& ch, const std::vector<double>& lambda,
                                         const std::vector<Density>& forms, const QuadratureOptions& opt = {}) {
  if (fib.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "chamber quadrature needs a planar fiber");
  if (lambda.size() != fib.size()) throw Error(ErrorCode::InvalidArgument, "one exponent per hyperplane expected");
  const auto e = detail::effective_exponents(lambda, forms);
  const double margin = detail::convergence_margin(fib, ch, e);
  const auto sign = detail::chamber_signs(fib, ch);
  const Point2 c = detail::centroid(ch.vertices);

  std::vector<detail::Triangle> tris;
  const std::size_t n = ch.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = ch.vertices[i];
    const Point2& b = ch.vertices[(i + 1) % n];
    const Point2 m = detail::midpoint(a, b);
    tris.push_back(detail::make_triangle(fib, a, m, c, sign));
    tris.push_back(detail::make_triangle(fib, b, m, c, sign));
  }

  detail::DensityEvaluator eval(fib, lambda, forms);
  const TensorTanhSinh rule(forms.size(), tanh_sinh_t_max(margin));
  ChamberIntegral out;
  out.values.assign(forms.size(), 0.0);

  auto run = [&](int fixed) {
    std::vector<RuleResult> parts;
    for (const auto& tri : tris) {
      auto f = [&](double r, double rc, double w, double wc, std::vector<double>& v) {
        if (!eval(tri, rc, r * wc, r * w, r * tri.jacobian, v)) std::fill(v.begin(), v.end(), 0.0);
      };
      parts.push_back(rule.integrate(f, 0.0, 0, fixed, fixed));
    }
    return parts;
  };

  if (opt.fixed_level >= 0) {
    auto parts = run(opt.fixed_level);
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < forms.size(); ++i) out.values[i] += p.values[i];
      out.error += p.error;
      out.evaluations += p.evaluations;
    }
    out.level = opt.fixed_level;
    return out;
  }

  // Raise the common level until the summed level-to-level change is small.
  std::vector<double> prev;
  for (int level = opt.min_level; level <= opt.max_level; ++level) {
    auto parts = run(level);
    std::vector<double> total(forms.size(), 0.0);
    double err = 0;
    std::size_t evals = 0;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < forms.size(); ++i) total[i] += p.values[i];
      err += p.error;
      evals += p.evaluations;
    }
    out.values = total;
    out.error = err;
    out.level = level;
    out.evaluations += evals;
    if (err <= opt.tol * max_norm(total)) return out;
  }
  throw Error(ErrorCode::ToleranceNotMet, "chamber quadrature error " + std::to_string(out.error) +
                                              " above tolerance at level " + std::to_string(opt.max_level));
}

/// Independent reference: fan from the first vertex, raw (u, w) triangle
/// coordinates, and iterated adaptive Gauss-Kronrod in both directions.
inline ChamberIntegral integrate_chamber_reference(const Fiber& fib, const Chamber2D& ch,
                                                   const std::vector<double>& lambda, const std::vector<Density>& forms,
                                                   double abs_tol) {
  if (fib.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "chamber quadrature needs a planar fiber");
  const auto e = detail::effective_exponents(lambda, forms);
  detail::convergence_margin(fib, ch, e);
  const auto sign = detail::chamber_signs(fib, ch);
  detail::DensityEvaluator eval(fib, lambda, forms);
  const std::size_t n = ch.vertices.size();
  const std::size_t m = forms.size();
  const AdaptiveGaussKronrod outer(m, 20000), inner(m, 20000);
  const double piece_tol = abs_tol / static_cast<double>(n - 2);

  ChamberIntegral out;
  out.values.assign(m, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto tri = detail::make_triangle(fib, ch.vertices[0], ch.vertices[i], ch.vertices[i + 1], sign);
    auto f = [&](double u, double uc, std::vector<double>& v) {
      auto g = [&](double w, double wc, std::vector<double>& y) {
        if (!eval(tri, uc, u * wc, u * w, u * tri.jacobian, y)) std::fill(y.begin(), y.end(), 0.0);
      };
      const auto r = inner.integrate(g, 0.1 * piece_tol, 1e-12);
      out.evaluations += r.evaluations;
      v = r.values;
    };
    const auto r = outer.integrate(f, piece_tol);
    for (std::size_t k = 0; k < m; ++k) out.values[k] += r.values[k];
    out.error += r.error;
  }
  return out;
}

}  // namespace pfaff::num
