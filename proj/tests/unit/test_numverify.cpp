#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pfaff/dfmodels.hpp"
#include "pfaff/numverify.hpp"

using namespace pfaff;
using namespace pfaff::num;

namespace {

std::map<Symbol, Rational> all_weights(const ArrangementFamily& fam, const Rational& v) {
  std::map<Symbol, Rational> w;
  for (const auto& s : fam.weight_symbols) w[s] = v;
  return w;
}

std::map<Symbol, Rational> j2_point() {
  return {{Symbol::base("x"), Rational(3, 10)}, {Symbol::base("y"), Rational(7, 10)}};
}

std::map<Symbol, Rational> i2_point() { return {{Symbol::base("x2"), Rational(2, 5)}}; }

/// Fiber with lines t = 0, s = 0, t + s = 1.
Fiber unit_triangle() {
  Fiber f;
  f.hyperplanes = {AffineForm{Rational(0), {Rational(1), Rational(0)}}, AffineForm{Rational(0), {Rational(0), Rational(1)}},
                   AffineForm{Rational(-1), {Rational(1), Rational(1)}}};
  return f;
}

struct J2 {
  ArrangementFamily fam = models::build_j2();
  ConnectionForm omega = connection_matrix(fam);
  std::map<Symbol, Rational> w = all_weights(fam, Rational(1, 2));
  SolutionBuilder sol{fam, basis_sets(fam, omega), w};
};

J2& j2() {
  static J2 s;
  return s;
}

CVector random_vector(Eigen::Index n, SeededRng& rng) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(rng.unit() - 0.5, rng.unit() - 0.5);
  return v;
}

CVector point2(Complex x, Complex y) {
  CVector p(2);
  p << x, y;
  return p;
}

}  // namespace

TEST(Quadrature, BetaIntegralWithEndpointSingularities) {
  const auto r = tanh_sinh([](double, double a, double b) { return std::sqrt(a) * std::sqrt(b); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(r.value, std::numbers::pi / 8, 1e-10);
  const auto s = tanh_sinh([](double, double a, double b) { return 1.0 / std::sqrt(a * b); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(s.value, std::numbers::pi, 1e-10);
}

TEST(Quadrature, KronrodRuleIsExactOnPolynomials) {
  const AdaptiveGaussKronrod gk(1);
  for (int k = 0; k <= 20; k += 5) {
    const auto r = gk.integrate([k](double x, double, std::vector<double>& o) { o[0] = std::pow(x, k); }, 1e-14);
    EXPECT_NEAR(r.values[0], 1.0 / (k + 1), 1e-14) << k;
  }
}

TEST(Quadrature, TriangleAreaAndDirichletMoments) {
  const Fiber f = unit_triangle();
  const auto ch = bounded_chambers(f);
  ASSERT_EQ(ch.size(), 1U);
  const auto area = integrate_chamber(f, ch[0], {0, 0, 0}, {volume_density()});
  EXPECT_NEAR(area.values[0], 0.5, 1e-14);
  // int t^a s^b (1-t-s)^c = G(a+1) G(b+1) G(c+1) / G(a+b+c+3)
  for (const auto& e : std::vector<std::array<double, 3>>{{0.5, 0.5, 0.5}, {-0.5, 0.25, -0.7}, {2.0, -0.3, 0.0}}) {
    const double want = std::tgamma(e[0] + 1) * std::tgamma(e[1] + 1) * std::tgamma(e[2] + 1) /
                        std::tgamma(e[0] + e[1] + e[2] + 3);
    const auto r = integrate_chamber(f, ch[0], {e[0], e[1], e[2]}, {volume_density()}, {1e-12, 3, 8, -1});
    EXPECT_NEAR(r.values[0] / want, 1.0, 1e-10) << e[0] << " " << e[1] << " " << e[2];
  }
}

TEST(Quadrature, DivergentExponentIsRejected) {
  const Fiber f = unit_triangle();
  const auto ch = bounded_chambers(f);
  try {
    integrate_chamber(f, ch[0], {-1.5, 0, 0}, {volume_density()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonconvergentExponent);
  }
  // t + s = 0 only touches the triangle at the origin.
  Fiber g = f;
  g.hyperplanes.push_back(AffineForm{Rational(0), {Rational(1), Rational(1)}});
  ASSERT_EQ(bounded_chambers(g).size(), 1U);
  EXPECT_NO_THROW(integrate_chamber(g, bounded_chambers(g)[0], {-0.5, -0.5, 0, -0.5}, {volume_density()}));
  try {
    integrate_chamber(g, bounded_chambers(g)[0], {-0.7, -0.7, 0, -0.7}, {volume_density()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonconvergentExponent);
  }
}

TEST(Quadrature, ChamberIntegralsAgreeWithAdaptiveReference) {
  auto& s = j2();
  const Fiber fib = instantiate_fiber(s.fam, j2_point());
  const auto w = specialized_weights(s.fam, s.w);
  const auto gm = generic_matroid(s.fam, s.omega.seed);
  std::vector<Density> forms;
  for (const auto& b : basis_sets(s.fam, s.omega)) forms.push_back(density_from_os(theta(b, gm.matroid, w), fib));
  const auto chambers = bounded_chambers(fib);
  for (std::size_t c : {std::size_t{0}, chambers.size() - 1}) {
    const auto fast = integrate_chamber(fib, chambers[c], to_doubles(w), forms);
    const auto ref = integrate_chamber_reference(fib, chambers[c], to_doubles(w), forms, 1e-11);
    const double scale = max_norm(ref.values);
    for (std::size_t i = 0; i < forms.size(); ++i) EXPECT_NEAR(fast.values[i], ref.values[i], 1e-8 * scale) << c << " " << i;
  }
}

TEST(Quadrature, TighterToleranceDoesNotInflateTheEstimate) {
  auto& s = j2();
  const Fiber fib = instantiate_fiber(s.fam, j2_point());
  const auto ch = bounded_chambers(fib);
  const auto w = to_doubles(specialized_weights(s.fam, s.w));
  double prev = -1;
  for (double tol = 1e-4; tol >= 1e-12; tol /= 2) {
    const auto r = integrate_chamber(fib, ch[2], w, {volume_density()}, {tol, 0, 8, -1});
    if (prev >= 0) EXPECT_LE(r.error, 2 * prev) << tol;
    prev = r.error;
  }
}

TEST(Solutions, ChamberCountsMatchBasisSizes) {
  auto count = [](const ArrangementFamily& fam, const std::map<Symbol, Rational>& p) {
    return bounded_chambers(instantiate_fiber(fam, p)).size();
  };
  EXPECT_EQ(count(models::build_j2(), j2_point()), 7U);
  EXPECT_EQ(count(models::build_in(2), i2_point()), 6U);
  EXPECT_EQ(count(models::build_in(3), {{Symbol::base("x2"), Rational(2, 5)}, {Symbol::base("x3"), Rational(3, 4)}}), 12U);
}

TEST(Solutions, AllChambersGiveIndependentSolutions) {
  auto& s = j2();
  const auto sols = s.sol.solve(j2_point(), {});
  const auto r = solution_rank(sols);
  EXPECT_EQ(r.rows, 7U);
  EXPECT_EQ(r.rank, 7U);
  EXPECT_LT(r.condition, 1e6);
}

TEST(Pfaffian, J2ResidualAndRichardsonRatio) {
  auto& s = j2();
  const auto r = richardson(s.sol, s.omega, s.w, j2_point(), Rational(1, 1000));
  EXPECT_LE(r.coarse.max_relative_residual, 1e-4);
  EXPECT_TRUE(r.coarse.meaningful);
  EXPECT_EQ(r.coarse.directions.size(), 2U);
  EXPECT_GE(r.ratio, 3.5);
  EXPECT_LE(r.ratio, 4.5);
}

TEST(Pfaffian, I2Residual) {
  const auto fam = models::build_in(2);
  const auto omega = connection_matrix(fam);
  const auto w = all_weights(fam, Rational(1, 2));
  const SolutionBuilder sol(fam, basis_sets(fam, omega), w);
  const auto r = richardson(sol, omega, w, i2_point(), Rational(1, 1000));
  EXPECT_LE(r.coarse.max_relative_residual, 1e-4);
  EXPECT_GE(r.ratio, 3.5);
  EXPECT_LE(r.ratio, 4.5);
}

TEST(Pfaffian, ZeroConnectionIsDetected) {
  auto& s = j2();
  PfaffianOptions opt;
  opt.zero_omega = true;
  const auto r = pfaffian_residual(s.sol, s.omega, s.w, j2_point(), Rational(1, 1000), opt);
  EXPECT_GT(r.max_relative_residual, 0.5);
}

TEST(Pfaffian, PerturbedConnectionIsDetected) {
  auto& s = j2();
  auto bad = s.omega;
  bad.matrices[0](0, 0) += RationalFunction(Poly(Rational(1, 10)));
  const auto r = pfaffian_residual(s.sol, bad, s.w, j2_point(), Rational(1, 1000));
  EXPECT_GT(r.max_relative_residual, 1e-3);
}

TEST(Transport, ConstantPathAndReversal) {
  auto& s = j2();
  const auto sys = FuchsianSystem::from(OmegaEvaluator(s.omega, s.w));
  SeededRng rng(5);
  const CVector f0 = random_vector(7, rng);
  EXPECT_EQ(transport(sys, f0, {point2(0.3, 0.7), point2(0.3, 0.7)}).value, f0);
  const std::vector<CVector> path{point2(0.3, 0.7), point2(0.35, 0.6), point2(Complex(0.25, 0.1), 0.65)};
  const auto there = transport(sys, f0, path).value;
  const auto back = transport(sys, there, reversed(path)).value;
  EXPECT_LE((back - f0).cwiseAbs().maxCoeff() / f0.cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Transport, ContractibleLoopIsTrivialAndLoopAroundDivisorIsNot) {
  auto& s = j2();
  const auto sys = FuchsianSystem::from(OmegaEvaluator(s.omega, s.w));
  SeededRng rng(9);
  const CVector f0 = random_vector(7, rng);
  const double r = 0.05;
  std::vector<CVector> small, around;
  for (int k = 0; k <= 16; ++k) {
    const Complex e = std::polar(r, 2 * std::numbers::pi * k / 16);
    small.push_back(point2(0.3 + e, 0.7));
    around.push_back(point2(0.5 + 0.25 * e / r, 0.5));
  }
  const auto loop = transport(sys, f0, small).value;
  EXPECT_LE((loop - f0).cwiseAbs().maxCoeff() / f0.cwiseAbs().maxCoeff(), 1e-6);
  // x circles y = 1/2 once: non-trivial monodromy around x = y.
  const auto mono = transport(sys, f0, around).value;
  EXPECT_GT((mono - f0).cwiseAbs().maxCoeff() / f0.cwiseAbs().maxCoeff(), 1e-2);
}

TEST(Transport, AgreesWithQuadratureAlongARealPath) {
  auto& s = j2();
  const auto sys = FuchsianSystem::from(OmegaEvaluator(s.omega, s.w));
  const auto start = s.sol.solve(j2_point(), {1e-12, 3, 8, -1});
  const std::map<Symbol, Rational> end_point{{Symbol::base("x"), Rational(1, 4)}, {Symbol::base("y"), Rational(3, 5)}};
  const auto end = s.sol.solve(end_point, {1e-12, 3, 8, -1});
  for (const auto& [key, c] : start) {
    CVector f0(7);
    for (int i = 0; i < 7; ++i) f0(i) = c.values[std::size_t(i)];
    const auto f = transport(sys, f0, {point2(0.3, 0.7), point2(0.25, 0.6)}).value;
    for (int i = 0; i < 7; ++i) EXPECT_NEAR(f(i).real(), end.at(key).values[std::size_t(i)], 1e-9);
    EXPECT_LE(f.imag().cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Transport, PathThroughDivisorIsRejected) {
  auto& s = j2();
  const auto sys = FuchsianSystem::from(OmegaEvaluator(s.omega, s.w));
  try {
    transport(sys, CVector::Ones(7), {point2(0.3, 0.7), point2(0.7, 0.3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathHitsSingularity);
  }
}

TEST(FuchsianOde, BothBranchesSatisfyTheFuchsianSystem) {
  const auto k = models::ode_coefficients().evaluate(
      models::ode_weights(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)));
  CVector y0(3);
  y0 << Complex(1, 0.2), Complex(-0.3, 0.5), Complex(0.7, -0.1);
  const std::vector<Complex> path{0.5, Complex(0.5, 0.3)};
  for (auto b : {models::GaugeBranch::Plus, models::GaugeBranch::Minus}) {
    const auto rep = ode_transport_residual(k, numeric_gauge(models::gauge_pipeline(k, b)), path, y0);
    EXPECT_LE(rep.max_relative_residual, 1e-6) << rep.branch;
    EXPECT_EQ(rep.checkpoints.size(), 10U);
  }
  const auto zero = ode_transport_residual(k, numeric_gauge(models::gauge_pipeline(k)), path, CVector::Zero(3));
  EXPECT_EQ(zero.max_relative_residual, 0.0);
}

TEST(FuchsianOde, MixedBranchesAreDetected) {
  const auto k = models::ode_coefficients().evaluate(
      models::ode_weights(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)));
  const auto plus = models::gauge_pipeline(k, models::GaugeBranch::Plus);
  const auto minus = models::gauge_pipeline(k, models::GaugeBranch::Minus);
  auto v = [](const Poly& p) { return QuadraticNumber(p.constant_value()); };
  const auto [a, b] = models::fuchsian_residues(v(k.K1), v(k.K2), v(k.L1), v(k.L2), v(k.L3), v(k.M1), v(k.M2), minus.eta, plus.zeta);
  const NumericGauge mixed{"mixed", minus.eta.to_complex(), plus.zeta.to_complex(), to_eigen(models::to_complex(a)),
                           to_eigen(models::to_complex(b))};
  CVector y0(3);
  y0 << 1.0, 0.5, -0.25;
  EXPECT_GT(ode_transport_residual(k, mixed, {0.5, Complex(0.5, 0.3)}, y0).max_relative_residual, 0.1);
  try {
    ode_transport_residual(k, numeric_gauge(plus), {0.5, -0.5}, y0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathHitsSingularity);
  }
}

TEST(PdeCheck, BothOperatorSetsAnnihilateTheIntegral) {
  const auto fam = models::build_j2();
  const auto w = all_weights(fam, Rational(1, 2));
  const auto sol = SolutionBuilder::volume(fam, w);
  const auto gen = pde_residual(models::pde_operators(2), {"P1", "P2"}, sol, w, j2_point(), Rational(1, 100));
  const auto ref = pde_residual(models::reference_n2_system(), {"E1", "E2"}, sol, w, j2_point(), Rational(1, 100));
  EXPECT_EQ(gen.chambers, 7U);
  EXPECT_LE(gen.max_relative_residual, 1e-3);
  EXPECT_LE(ref.max_relative_residual, 1e-3);
  const auto half = pde_residual(models::pde_operators(2), {"P1", "P2"}, sol, w, j2_point(), Rational(1, 200));
  const double ratio = gen.max_relative_residual / half.max_relative_residual;
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(PdeCheck, MutatedCoefficientIsDetected) {
  const auto fam = models::build_j2();
  const auto w = all_weights(fam, Rational(1, 2));
  const auto sol = SolutionBuilder::volume(fam, w);
  auto ops = models::reference_n2_system();
  ops[1].add({0, 1}, Poly(Rational(1, 2)));
  const auto r = pde_residual(ops, {"E1", "E2"}, sol, w, j2_point(), Rational(1, 100));
  EXPECT_LE(r.operators[0].residual, 1e-3);
  EXPECT_GT(r.operators[1].residual, 0.05);
}

TEST(PdeCheck, ZeroWeightsKillConstants) {
  std::map<Symbol, Rational> zero;
  for (const char* n : {"a", "b", "c", "g"}) zero[Symbol::weight(n)] = Rational(0);
  for (const auto& op : models::pde_operators(2)) EXPECT_TRUE(op.apply(Poly(1)).evaluate(zero).is_zero());
}

TEST(Reports, JsonEchoesInputs) {
  auto& s = j2();
  const auto r = pfaffian_residual(s.sol, s.omega, s.w, j2_point(), Rational(1, 1000));
  const auto j = to_json(r);
  EXPECT_EQ(j["family"], "j2");
  EXPECT_EQ(j["h"], "1/1000");
  EXPECT_EQ(j["point"]["x"], "3/10");
  EXPECT_EQ(j["weights"]["g"], "1/2");
  EXPECT_EQ(j["directions"].size(), 2U);
}
