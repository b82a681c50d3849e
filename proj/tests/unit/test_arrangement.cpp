#include <gtest/gtest.h>

#include <set>

#include "pfaff/arrangement.hpp"
#include "pfaff/dfmodels/models.hpp"

using namespace pfaff;

namespace {

std::map<Symbol, Rational> j2_point() {
  return {{Symbol::base("x"), Rational(3, 10)}, {Symbol::base("y"), Rational(7, 10)}};
}

IndexSet labels_to_set(const ArrangementFamily& fam, std::vector<std::string> labels) {
  IndexSet s;
  for (const auto& l : labels) s.push_back(fam.index_of(l));
  std::sort(s.begin(), s.end());
  return s;
}

/// Brute-force dependence from the definition: solve for a common point and
/// compare the codimension with the set size.
std::vector<IndexSet> brute_force_circuits(const Fiber& f) {
  const std::size_t l = f.size(), m = f.dim();
  auto meets_with_codim = [&](const IndexSet& s) -> std::optional<std::size_t> {
    Matrix<Rational> a(s.size(), m), b(s.size(), 1);
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (std::size_t j = 0; j < m; ++j) a(r, j) = f.hyperplanes[s[r]].t[j];
      b(r, 0) = -f.hyperplanes[s[r]].constant;
    }
    const auto sol = try_solve_linear(a, b);
    if (!sol.consistent) return std::nullopt;
    return m - sol.kernel_dim;
  };
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
    const IndexSet s = from_mask(mask);
    auto c = meets_with_codim(s);
    if (!c || *c == s.size()) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      IndexSet t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      auto ct = meets_with_codim(t);
      if (!ct || *ct != t.size()) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Fiber, J2InstantiationAndSingularBasepoint) {
  const auto fam = models::build_j2();
  const Fiber f = instantiate_fiber(fam, j2_point());
  ASSERT_EQ(f.size(), 7U);
  EXPECT_EQ(f.hyperplanes[2].constant, Rational(-3, 10));
  EXPECT_EQ(f.hyperplanes[5].constant, Rational(-7, 10));
  EXPECT_EQ(f.hyperplanes[6].t, (std::vector<Rational>{1, -1}));
  try {
    instantiate_fiber(fam, {{Symbol::base("x"), Rational(0)}, {Symbol::base("y"), Rational(1, 2)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularBasepoint);
  }
}

TEST(Fiber, I2AtOneThird) {
  const auto fam = models::build_in(2);
  const Fiber f = instantiate_fiber(fam, {{Symbol::base("x2"), Rational(1, 3)}});
  const std::vector<std::string> expected_labels{"V0", "H0", "V1", "V2", "H1", "H2", "D"};
  EXPECT_EQ(fam.labels, expected_labels);
  EXPECT_EQ(f.hyperplanes[fam.index_of("V2")].constant, Rational(-1, 3));
  EXPECT_EQ(f.hyperplanes[fam.index_of("H1")].constant, Rational(-1));
  EXPECT_EQ(f.hyperplanes[fam.index_of("H2")].t, (std::vector<Rational>{0, 1}));
}

TEST(Matroid, CircuitsMatchBruteForce) {
  for (const auto& fam : {models::build_j2(), models::build_in(2), models::build_in(3)}) {
    SeededRng rng(5);
    const Matroid mat(instantiate_fiber(fam, random_base_point(fam, rng)));
    auto circuits = mat.circuits();
    std::sort(circuits.begin(), circuits.end());
    EXPECT_EQ(circuits, brute_force_circuits(mat.fiber())) << fam.name;
    for (const auto& c : circuits)
      for (const auto& d : circuits)
        if (c != d) EXPECT_FALSE(std::includes(d.begin(), d.end(), c.begin(), c.end()));
  }
}

TEST(Matroid, J2Circuits) {
  const auto fam = models::build_j2();
  const Matroid mat(instantiate_fiber(fam, j2_point()));
  const auto& cs = mat.circuits();
  EXPECT_NE(std::find(cs.begin(), cs.end(), labels_to_set(fam, {"1", "4", "7"})), cs.end());
  EXPECT_NE(std::find(cs.begin(), cs.end(), labels_to_set(fam, {"2", "5", "7"})), cs.end());
  const auto& bs = mat.broken_circuits();
  EXPECT_NE(std::find(bs.begin(), bs.end(), labels_to_set(fam, {"4", "7"})), bs.end());
}

TEST(Matroid, InBrokenCircuitAndParallelLines) {
  const auto fam = models::build_in(2);
  const Matroid mat(instantiate_fiber(fam, {{Symbol::base("x2"), Rational(2, 5)}}));
  const auto& cs = mat.circuits();
  EXPECT_NE(std::find(cs.begin(), cs.end(), labels_to_set(fam, {"V1", "H1", "D"})), cs.end());
  const auto& bs = mat.broken_circuits();
  EXPECT_NE(std::find(bs.begin(), bs.end(), labels_to_set(fam, {"H1", "D"})), bs.end());
  const auto top = mat.nbc_simplices(1);
  EXPECT_EQ(std::find(top.begin(), top.end(), labels_to_set(fam, {"V1", "V2"})), top.end());
  EXPECT_FALSE(mat.meets(labels_to_set(fam, {"V1", "V2"})));
}

TEST(Matroid, NbcComplexIsDownwardClosed) {
  const auto fam = models::build_in(3);
  const auto gm = generic_matroid(fam, 17);
  const auto& mat = gm.matroid;
  EXPECT_EQ(mat.nbc_simplices(0).size(), fam.size());
  for (const auto& s : mat.nbc_simplices(1)) {
    EXPECT_TRUE(mat.is_nbc({s[0]}));
    EXPECT_TRUE(mat.is_nbc({s[1]}));
  }
}

TEST(BetaNbc, J2GoldenList) {
  const auto fam = models::build_j2();
  const auto gm = generic_matroid(fam, 1);
  std::vector<IndexSet> expected;
  for (const auto& p : std::vector<std::vector<std::string>>{
           {"2", "5"}, {"2", "6"}, {"2", "7"}, {"3", "5"}, {"3", "6"}, {"3", "7"}, {"6", "7"}})
    expected.push_back(labels_to_set(fam, p));
  EXPECT_EQ(gm.matroid.beta_nbc(), expected);
  const auto top = gm.matroid.nbc_simplices(1);
  EXPECT_NE(std::find(top.begin(), top.end(), labels_to_set(fam, {"3", "5"})), top.end());
  EXPECT_EQ(std::find(top.begin(), top.end(), labels_to_set(fam, {"4", "7"})), top.end());
}

TEST(BetaNbc, InGoldenLists) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto fam = models::build_in(n);
    const auto gm = generic_matroid(fam, 2);
    std::set<IndexSet> expected;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j)
        expected.insert(labels_to_set(fam, {"V" + std::to_string(i), "H" + std::to_string(j)}));
      expected.insert(labels_to_set(fam, {"V" + std::to_string(i), "D"}));
    }
    const auto got = gm.matroid.beta_nbc();
    EXPECT_EQ(std::set<IndexSet>(got.begin(), got.end()), expected) << "n=" << n;
    EXPECT_EQ(got.size(), n * n + n);
  }
}

TEST(BetaNbc, GeneralPositionHasNoBrokenCircuits) {
  Fiber f;
  f.hyperplanes = {{Rational(0), {1, 0}}, {Rational(0), {0, 1}}, {Rational(-1), {1, 1}}};
  const Matroid mat(f);
  EXPECT_TRUE(mat.broken_circuits().empty());
  // Only {1,2} (0-based) has a smaller replacement for both members.
  EXPECT_EQ(mat.beta_nbc(), (std::vector<IndexSet>{{1, 2}}));
}

TEST(OSAlgebra, StraighteningExamples) {
  const auto fam = models::build_j2();
  const Matroid mat(instantiate_fiber(fam, j2_point()));
  using E = OSElement<Rational>;
  E swapped;
  swapped.add({4, 2}, Rational(1));
  EXPECT_EQ(swapped.coefficient({2, 4}), Rational(-1));

  E broken;
  broken.add(labels_to_set(fam, {"4", "7"}), Rational(1));
  const E s = os_straighten(broken, mat);
  E expected;
  expected.add(labels_to_set(fam, {"1", "7"}), Rational(1));
  expected.add(labels_to_set(fam, {"1", "4"}), Rational(-1));
  EXPECT_EQ(s, expected);

  E repeated;
  repeated.add({3, 3}, Rational(5));
  EXPECT_TRUE(os_straighten(repeated, mat).is_zero());
}

TEST(OSAlgebra, StraighteningIsProjectorKillingRelations) {
  const auto fam = models::build_in(3);
  const auto gm = generic_matroid(fam, 9);
  const auto& mat = gm.matroid;
  const std::size_t l = mat.ground_size();
  // Every degree-2 monomial straightens onto nbc support, idempotently.
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      OSElement<Rational> e;
      e.add({i, j}, Rational(1));
      const auto s = os_straighten(e, mat);
      for (const auto& [t, c] : s.terms()) EXPECT_TRUE(mat.is_nbc(t));
      EXPECT_EQ(os_straighten(s, mat), s);
      if (!mat.meets({std::min(i, j), std::max(i, j)})) {
        EXPECT_TRUE(s.is_zero());
      }
    }
  // Boundary of every circuit vanishes.
  for (const auto& c : mat.circuits()) {
    OSElement<Rational> boundary;
    for (std::size_t k = 0; k < c.size(); ++k) {
      IndexSet t = c;
      t.erase(t.begin() + static_cast<long>(k));
      boundary.add(t, Rational(k % 2 == 0 ? 1 : -1));
    }
    EXPECT_TRUE(os_straighten(boundary, mat).is_zero());
  }
}

TEST(OSAlgebra, NonTerminationGuard) {
  const auto fam = models::build_j2();
  const Matroid mat(instantiate_fiber(fam, j2_point()));
  OSElement<Rational> e;
  e.add(labels_to_set(fam, {"4", "7"}), Rational(1));
  try {
    os_straighten(e, mat, 0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NonTerminationGuard);
  }
}

TEST(Chambers, CountsMatchBetaNbcAndVertexFormula) {
  struct Case {
    ArrangementFamily fam;
    std::map<Symbol, Rational> pt;
    std::size_t expected;
  };
  std::vector<Case> cases{{models::build_j2(), j2_point(), 7},
                          {models::build_in(2), {{Symbol::base("x2"), Rational(1, 3)}}, 6},
                          {models::build_in(3), {{Symbol::base("x2"), Rational(1, 3)}, {Symbol::base("x3"), Rational(3, 2)}}, 12}};
  for (const auto& c : cases) {
    const Fiber f = instantiate_fiber(c.fam, c.pt);
    const auto chambers = bounded_chambers(f);
    EXPECT_EQ(chambers.size(), c.expected) << c.fam.name;
    // Bounded regions of a line arrangement: 1 - l + sum over vertices of (lines through it - 1).
    std::map<Point2, std::set<std::size_t>> through;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        const auto& a = f.hyperplanes[i];
        const auto& b = f.hyperplanes[j];
        Matrix<Rational> m(2, 2), r(2, 1);
        m(0, 0) = a.t[0]; m(0, 1) = a.t[1]; m(1, 0) = b.t[0]; m(1, 1) = b.t[1];
        r(0, 0) = -a.constant; r(1, 0) = -b.constant;
        const auto sol = try_solve_linear(m, r);
        if (!sol.consistent || sol.kernel_dim != 0) continue;
        auto& s = through[Point2{sol.x(0, 0), sol.x(1, 0)}];
        s.insert(i);
        s.insert(j);
      }
    long count = 1 - static_cast<long>(f.size());
    for (const auto& [p, s] : through) count += static_cast<long>(s.size()) - 1;
    EXPECT_EQ(static_cast<long>(chambers.size()), count);
    for (const auto& ch : chambers) {
      EXPECT_GT(ch.twice_area().sign(), 0);
      // Edges lie on their lines and the centroid avoids every line.
      Point2 centroid{Rational(0), Rational(0)};
      for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        const auto& h = f.hyperplanes[ch.edge_lines[k]];
        for (const auto& p : {ch.vertices[k], ch.vertices[(k + 1) % ch.vertices.size()]})
          EXPECT_TRUE((h.constant + h.t[0] * p[0] + h.t[1] * p[1]).is_zero());
        centroid[0] += ch.vertices[k][0] / Rational(static_cast<long>(ch.vertices.size()));
        centroid[1] += ch.vertices[k][1] / Rational(static_cast<long>(ch.vertices.size()));
      }
      for (const auto& h : f.hyperplanes)
        EXPECT_FALSE((h.constant + h.t[0] * centroid[0] + h.t[1] * centroid[1]).is_zero());
    }
  }
}

TEST(Chambers, SingleLineAndDimensionCheck) {
  Fiber f;
  f.hyperplanes = {{Rational(0), {1, 0}}};
  EXPECT_TRUE(bounded_chambers(f).empty());
  Fiber g;
  g.hyperplanes = {{Rational(0), {1, 0, 0}}};
  try {
    bounded_chambers(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
  }
}

TEST(FamilyIO, RoundTripIsBitExact) {
  for (const auto& fam : {models::build_j2(), models::build_in(3), models::build_jn(3)}) {
    const std::string text = family_to_json(fam).dump(2);
    const auto back = family_from_json(ordered_json::parse(text));
    EXPECT_EQ(family_to_json(back).dump(2), text);
  }
}

TEST(FamilyIO, OrderPermutationIsApplied) {
  auto j = family_to_json(models::build_j2());
  j["order"] = {6, 5, 4, 3, 2, 1, 0};
  const auto fam = family_from_json(j);
  EXPECT_EQ(fam.labels.front(), "7");
  EXPECT_EQ(fam.weights.front(), Poly::symbol(Symbol::weight("g")));
}

TEST(FamilyIO, RejectsMixedPools) {
  auto j = family_to_json(models::build_j2());
  j["hyperplanes"][0]["weight"] = "x";
  EXPECT_THROW(family_from_json(j), Error);
}

TEST(Models, Boundaries) {
  try {
    models::build_in(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NTooSmall);
  }
  const auto j2 = models::build_j2();
  EXPECT_EQ(j2.hyperplanes[2].constant, -Poly::symbol(Symbol::base("x")));
  EXPECT_EQ(j2.weights[2], Poly::symbol(Symbol::weight("c")));
  const auto i2 = models::build_in(2);
  EXPECT_EQ(i2.size(), 7U);
  EXPECT_EQ(i2.weights.back(), Poly::symbol(Symbol::weight("g")));
}
