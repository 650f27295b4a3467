#include <gtest/gtest.h>

#include <cmath>

#include "pairvis/errors.hpp"
#include "pairvis/solver.hpp"
#include "support.hpp"

using namespace pairvis;
using namespace pairvis::testing;

namespace {

// The witness chord is tangent to pi(s,t) at its pivot (exact predicate).
void expect_tangent(const SweepGeometry& g, const SolveResult& r) {
  ASSERT_TRUE(r.pivot.has_value());
  const GeodesicPath& path = g.path();
  ASSERT_GE(r.pivot_index, 1u);
  ASSERT_LT(r.pivot_index + 1, path.size());
  EXPECT_EQ(*r.pivot, path.points[r.pivot_index]);
  const int a = sign_of(orientation(*r.pivot, r.through, path.points[r.pivot_index - 1]));
  const int b = sign_of(orientation(*r.pivot, r.through, path.points[r.pivot_index + 1]));
  EXPECT_GE(a * b, 0);
}

// Value, distances, witnesses and paths tell one consistent story.
void expect_consistent(const SimplePolygon& poly, Point s, Point t, const SolveResult& r,
                       const Objective& obj) {
  const OracleGeometry geo(poly);
  const double tol = 1e-9 * (1.0 + poly.bounds().diagonal());
  EXPECT_NEAR(r.value, obj.combine(r.ds, r.dt), tol);
  EXPECT_NEAR(r.ds, r.path_s.length, tol);
  EXPECT_NEAR(r.dt, r.path_t.length, tol);
  EXPECT_EQ(r.path_s.front(), s);
  EXPECT_EQ(r.path_t.front(), t);
  EXPECT_NEAR(distance(r.path_s.back(), r.s_star), 0.0, tol);
  EXPECT_NEAR(distance(r.path_t.back(), r.t_star), 0.0, tol);
  EXPECT_NEAR(r.ds, geo.shortest_path(s, r.s_star).length, tol);
  EXPECT_NEAR(r.dt, geo.shortest_path(t, r.t_star).length, tol);
  if (r.pivot) {
    // The segment grazes the pivot, so test the halves on either side of it.
    EXPECT_TRUE(geo.visible(r.s_star, *r.pivot));
    EXPECT_TRUE(geo.visible(*r.pivot, r.t_star));
    EXPECT_NEAR(cross(r.s_star - *r.pivot, r.t_star - *r.pivot), 0.0,
                1e-9 * (1.0 + distance(r.s_star, *r.pivot) * distance(r.t_star, *r.pivot)));
  } else {
    EXPECT_TRUE(geo.visible(r.s_star, r.t_star));
  }
}

}  // namespace

TEST(Solver, LInstanceMinMax) {
  const SimplePolygon poly = l_polygon();
  const SolveResult r = solve(poly, kLs, kLt, Objective::min_max());
  EXPECT_FALSE(r.visible);
  EXPECT_NEAR(r.value, 0.15 / std::sqrt(2.44), 1e-12);
  EXPECT_NEAR(r.ds, r.dt, 1e-12);
  ASSERT_TRUE(r.pivot.has_value());
  EXPECT_EQ(*r.pivot, Point(1.0, 1.0));
  const Triangulation tri(poly);
  expect_tangent(SweepGeometry(tri, kLs, kLt), r);
  expect_consistent(poly, kLs, kLt, r, Objective::min_max());
}

TEST(Solver, LInstanceMinSum) {
  const SimplePolygon poly = l_polygon();
  const SolveResult r = solve(poly, kLs, kLt, Objective::min_sum());
  EXPECT_NEAR(r.value, 0.25 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.t_star, kLt);
  EXPECT_NEAR(distance(r.s_star, {0.375, 1.625}), 0.0, 1e-12);
  expect_consistent(poly, kLs, kLt, r, Objective::min_sum());
}

TEST(Solver, LInstanceOffset) {
  const SimplePolygon poly = l_polygon();
  const double mm = solve(poly, kLs, kLt, Objective::min_max()).value;
  const Objective off = Objective::offset(0.1, 0.0);
  const SolveResult r = solve(poly, kLs, kLt, off);
  EXPECT_GE(r.value, mm - 1e-12);
  EXPECT_LE(r.value, mm + 0.1 + 1e-12);
  OracleConfig cfg;
  cfg.angular_samples = 20000;
  const OracleResult o = oracle_solve(poly, kLs, kLt, off, cfg);
  EXPECT_GE(o.value, r.value - 1e-9);
  EXPECT_LE(o.value, r.value + o.error_bound + 1e-12);
  expect_consistent(poly, kLs, kLt, r, off);
}

TEST(Solver, WeightedHalfIsHalfTheMinMax) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RandomInstance in = random_instance(6 + seed % 12, seed);
    const double mm = solve(in.polygon, in.s, in.t, Objective::min_max()).value;
    const double w = solve(in.polygon, in.s, in.t, Objective::weighted(0.5)).value;
    EXPECT_NEAR(w, 0.5 * mm, 1e-9 * (1.0 + mm)) << "seed " << seed;
  }
}

TEST(Solver, VisiblePairCostsNothing) {
  const SimplePolygon sq = unit_square();
  const Point s{0.2, 0.3}, t{0.8, 0.6};
  for (const Objective& obj : {Objective::min_max(), Objective::min_sum(), Objective::weighted(0.3)}) {
    const SolveResult r = solve(sq, s, t, obj);
    EXPECT_TRUE(r.visible);
    EXPECT_EQ(r.value, 0.0);
    EXPECT_EQ(r.s_star, s);
    EXPECT_EQ(r.t_star, t);
    EXPECT_FALSE(r.pivot.has_value());
  }
  EXPECT_EQ(solve(sq, s, t, Objective::offset(0.3, 0.1)).value, 0.3);
  const Triangulation tri(sq);
  const SolveTrace trace = solve_with_trace(tri, s, t, Objective::min_max());
  EXPECT_TRUE(trace.events.events.empty());
  EXPECT_TRUE(trace.pieces.empty());
}

TEST(Solver, LInstanceTraceHasOneInterval) {
  const Triangulation tri(l_polygon());
  const SolveTrace trace = solve_with_trace(tri, kLs, kLt, Objective::min_max());
  EXPECT_EQ(trace.events.events.size(), 2u);
  EXPECT_EQ(trace.pieces.size(), 1u);
  EXPECT_EQ(trace.optima.size(), 1u);
  EXPECT_EQ(trace.result.interval_id, 0u);
}

TEST(Solver, ZigzagIntervalsMatchSampledChanges) {
  const SimplePolygon poly = zigzag_polygon();
  const Triangulation tri(poly);
  const SolveTrace trace = solve_with_trace(tri, kZs, kZt, Objective::min_max());
  const SweepSampler sm(poly, kZs, kZt);
  std::size_t changes = 0;
  const std::size_t pivots = sm.path().size() - 2;
  for (std::size_t i = 1; i <= pivots; ++i) changes += sampled_changes(sm, i, 20000).size();
  // Each hand-off between pivots is a change of its own.
  EXPECT_EQ(trace.pieces.size(), changes + (pivots - 1) + 1);
  EXPECT_NEAR(trace.result.value, 1.0, 1e-12);
  EXPECT_NEAR(solve(tri, kZs, kZt, Objective::min_sum()).value, 2.0, 1e-12);
}

TEST(Solver, PointsOutsideAreRejected) {
  const SimplePolygon poly = l_polygon();
  try {
    solve(poly, {1.5, 1.5}, kLt, Objective::min_max());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsidePolygon);
  }
}

TEST(Solver, RandomInstancesAgreeWithTheOracle) {
  OracleConfig cfg;
  cfg.angular_samples = 4000;
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const RandomInstance in = random_instance(6 + seed % 10, seed);
    const Triangulation tri(in.polygon);
    const SweepGeometry g(tri, in.s, in.t);
    for (const Objective& obj : {Objective::min_max(), Objective::min_sum()}) {
      const SolveResult r = solve(tri, in.s, in.t, obj);
      const OracleResult o = oracle_solve(in.polygon, in.s, in.t, obj, cfg);
      const double tol = 1e-9 * (1.0 + r.value);
      EXPECT_GE(o.value, r.value - tol) << "seed " << seed;
      EXPECT_LE(o.value, r.value + o.error_bound + tol) << "seed " << seed;
      expect_consistent(in.polygon, in.s, in.t, r, obj);
      if (!r.visible) expect_tangent(g, r);
    }
  }
}

TEST(Solver, IsDeterministic) {
  const RandomInstance in = random_instance(20, 5);
  const SolveResult a = solve(in.polygon, in.s, in.t, Objective::min_max());
  const SolveResult b = solve(in.polygon, in.s, in.t, Objective::min_max());
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.s_star, b.s_star);
  EXPECT_EQ(a.t_star, b.t_star);
  EXPECT_EQ(a.interval_id, b.interval_id);
}
