#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

#include "pfaff/exactmath/errors.hpp"

namespace pfaff::num {

/// Node of a rule on [0, 1]. Both x and 1 - x are stored so that integrands
/// can evaluate distances to either endpoint without cancellation.
struct UnitNode {
  double x, xc, weight;
};

/// Tanh-sinh nodes j*h for 0 < |j*h| <= t_max (and j = 0), weights without the factor h.
inline std::vector<UnitNode> tanh_sinh_nodes(int level, double t_max, bool odd_only) {
  const double h = std::ldexp(1.0, -level);
  const long jmax = static_cast<long>(std::floor(t_max / h));
  std::vector<UnitNode> out;
  for (long j = -jmax; j <= jmax; ++j) {
    if (odd_only && level > 0 && j % 2 == 0) continue;
    const double t = static_cast<double>(j) * h;
    const double s = std::numbers::pi / 2 * std::sinh(t);
    const double x = 1.0 / (1.0 + std::exp(-2 * s));
    const double xc = 1.0 / (1.0 + std::exp(2 * s));
    const double w = std::numbers::pi * std::cosh(t) * x * xc;
    if (w == 0.0 || x == 0.0 || xc == 0.0) continue;
    out.push_back({x, xc, w});
  }
  return out;
}

/// Truncation point of the tanh-sinh sum for an integrand behaving like
/// d^(margin - 1) at an endpoint at distance d.
inline double tanh_sinh_t_max(double margin) {
  margin = std::clamp(margin, 1e-3, 1.0);
  return std::min(6.0, std::asinh(45.0 / (std::numbers::pi * margin)));
}

using VectorIntegrand1 = std::function<void(double x, double xc, std::vector<double>& out)>;
using VectorIntegrand2 =
    std::function<void(double u, double uc, double w, double wc, std::vector<double>& out)>;

struct RuleResult {
  std::vector<double> values;
  /// Max-norm difference to the previous level.
  double error = 0;
  int level = 0;
  std::size_t evaluations = 0;
};

inline double max_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Nested tensor-product tanh-sinh on the unit square. Levels min_level..max_level
/// are summed incrementally; stops once the level-to-level change drops below
/// tol * max(|I|, floor). With fixed_level >= 0 exactly that level is used.
class TensorTanhSinh {
 public:
  TensorTanhSinh(std::size_t components, double t_max) : n_(components), t_max_(t_max) {}

  RuleResult integrate(const VectorIntegrand2& f, double tol, int min_level, int max_level, int fixed_level = -1,
                       double floor = 0.0) const {
    RuleResult r;
    std::vector<double> sum(n_, 0.0), prev, buf(n_);
    std::vector<UnitNode> all;
    const int last = fixed_level >= 0 ? fixed_level : max_level;
    for (int level = 0; level <= last; ++level) {
      auto fresh = tanh_sinh_nodes(level, t_max_, true);
      // Pairs with at least one new coordinate: new x all, and old x new.
      std::vector<UnitNode> merged = all;
      merged.insert(merged.end(), fresh.begin(), fresh.end());
      auto add = [&](const UnitNode& a, const UnitNode& b) {
        f(a.x, a.xc, b.x, b.xc, buf);
        ++r.evaluations;
        const double w = a.weight * b.weight;
        for (std::size_t i = 0; i < n_; ++i) sum[i] += w * buf[i];
      };
      for (const auto& a : fresh)
        for (const auto& b : merged) add(a, b);
      for (const auto& a : all)
        for (const auto& b : fresh) add(a, b);
      all = std::move(merged);

      const double h = std::ldexp(1.0, -level);
      std::vector<double> cur(n_);
      for (std::size_t i = 0; i < n_; ++i) cur[i] = sum[i] * h * h;
      r.level = level;
      if (!prev.empty()) {
        double d = 0;
        for (std::size_t i = 0; i < n_; ++i) d = std::max(d, std::abs(cur[i] - prev[i]));
        r.error = d;
      }
      r.values = cur;
      prev = std::move(cur);
      if (fixed_level < 0 && level >= min_level && r.error <= tol * std::max(max_norm(r.values), floor)) break;
    }
    return r;
  }

 private:
  std::size_t n_;
  double t_max_;
};

/// Tanh-sinh on [a, b] for integrands with endpoint singularities;
/// f receives (x - a) and (b - x) as well as x.
struct ScalarResult {
  double value = 0, error = 0;
  int level = 0;
};

inline ScalarResult tanh_sinh(const std::function<double(double x, double from_a, double from_b)>& f, double a,
                              double b, double tol = 1e-12, double t_max = 6.0, int max_level = 12) {
  const double len = b - a;
  double sum = 0;
  ScalarResult r;
  double prev = 0;
  for (int level = 0; level <= max_level; ++level) {
    for (const auto& n : tanh_sinh_nodes(level, t_max, true)) sum += n.weight * f(a + len * n.x, len * n.x, len * n.xc);
    const double cur = sum * std::ldexp(1.0, -level) * len;
    r.level = level;
    r.value = cur;
    if (level > 0) {
      r.error = std::abs(cur - prev);
      if (level >= 3 && r.error <= tol * std::abs(cur)) return r;
    }
    prev = cur;
  }
  throw Error(ErrorCode::ToleranceNotMet, "tanh-sinh did not reach the requested tolerance");
}

/// Adaptive Gauss-Kronrod (7/15) quadrature of a vector integrand on [0, 1].
/// The interval is split at 1/2 and each half is parametrised by the distance
/// to its endpoint, so values near either end are resolved to full precision.
class AdaptiveGaussKronrod {
 public:
  AdaptiveGaussKronrod(std::size_t components, std::size_t max_intervals = 4000)
      : n_(components), max_intervals_(max_intervals) {}

  /// Stops once the max-norm error is below max(abs_tol, rel_tol * |I|).
  RuleResult integrate(const VectorIntegrand1& f, double abs_tol, double rel_tol = 0.0) const {
    struct Piece {
      double a, b;
      bool from_right;
      std::vector<double> value;
      double error;
      bool operator<(const Piece& o) const { return error < o.error; }
    };
    std::priority_queue<Piece> queue;
    RuleResult r;
    auto eval = [&](double a, double b, bool from_right) {
      Piece p{a, b, from_right, std::vector<double>(n_, 0.0), 0.0};
      std::vector<double> gauss(n_, 0.0), buf(n_);
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (int k = 0; k < 15; ++k) {
        const double d = mid + half * node(k);
        // d is the distance from the nearer endpoint.
        if (from_right) f(1.0 - d, d, buf);
        else f(d, 1.0 - d, buf);
        ++r.evaluations;
        for (std::size_t i = 0; i < n_; ++i) {
          p.value[i] += half * kronrod_weight(k) * buf[i];
          gauss[i] += half * gauss_weight(k) * buf[i];
        }
      }
      for (std::size_t i = 0; i < n_; ++i) p.error = std::max(p.error, std::abs(p.value[i] - gauss[i]));
      return p;
    };
    std::vector<double> total(n_, 0.0);
    double err = 0;
    auto push = [&](Piece p) {
      for (std::size_t i = 0; i < n_; ++i) total[i] += p.value[i];
      err += p.error;
      queue.push(std::move(p));
    };
    push(eval(0.0, 0.5, false));
    push(eval(0.0, 0.5, true));
    while (err > std::max(abs_tol, rel_tol * max_norm(total))) {
      if (queue.size() >= max_intervals_)
        throw Error(ErrorCode::ToleranceNotMet, "adaptive Gauss-Kronrod exhausted its interval budget");
      const Piece worst = queue.top();
      queue.pop();
      for (std::size_t i = 0; i < n_; ++i) total[i] -= worst.value[i];
      err -= worst.error;
      const double m = 0.5 * (worst.a + worst.b);
      push(eval(worst.a, m, worst.from_right));
      push(eval(m, worst.b, worst.from_right));
    }
    std::fill(total.begin(), total.end(), 0.0);
    err = 0;
    while (!queue.empty()) {
      for (std::size_t i = 0; i < n_; ++i) total[i] += queue.top().value[i];
      err += queue.top().error;
      queue.pop();
    }
    r.values = total;
    r.error = err;
    return r;
  }

 private:
  static constexpr std::array<double, 8> kXgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                              0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                              0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                              0.207784955007898467600689403773245, 0.0};
  static constexpr std::array<double, 8> kWgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                              0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                              0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                              0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> kWg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                             0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  // k = 0..14 runs over -x_0, ..., -x_6, 0, x_6, ..., x_0.
  static double node(int k) { return k < 7 ? -kXgk[k] : k == 7 ? 0.0 : kXgk[14 - k]; }
  static double kronrod_weight(int k) { return kWgk[k < 8 ? k : 14 - k]; }
  static double gauss_weight(int k) {
    const int j = k < 8 ? k : 14 - k;
    return j % 2 == 1 ? kWg[j / 2] : 0.0;
  }

  std::size_t n_;
  std::size_t max_intervals_;
};

}  // namespace pfaff::num
