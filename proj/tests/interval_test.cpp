#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pairvis/errors.hpp"
#include "pairvis/interval.hpp"

using namespace pairvis;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Point kPivot{1.0, 1.0};
constexpr Point kS{0.5, 1.75};
constexpr Point kT{1.75, 0.25};

LegStructure foot(Point anchor, double prefix = 0.0) {
  LegStructure l;
  l.anchor = anchor;
  l.prefix = prefix;
  l.leg = LegCase::Foot;
  return l;
}

// Chords through (1,1) between the line through s and the line x + y = 2.
IntervalProblem l_problem(const Objective& obj) {
  IntervalProblem p;
  p.pivot = kPivot;
  p.s = foot(kS);
  p.t = foot(kT);
  p.theta_lo = std::atan2(0.75, -0.5);
  p.theta_hi = 0.75 * kPi;
  p.objective = obj;
  return p;
}

double line_distance(Point q, double theta) {
  return std::abs(std::sin(theta) * (q.x - kPivot.x) - std::cos(theta) * (q.y - kPivot.y));
}

double sampled_min(const IntervalProblem& p, int samples) {
  double best = INFINITY;
  for (int k = 0; k <= samples; ++k) {
    const double th = p.theta_lo + (p.theta_hi - p.theta_lo) * k / samples;
    const LegEvaluation e = evaluate_at(p, th);
    best = std::min(best, p.objective.combine(e.ds, e.dt));
  }
  return best;
}

}  // namespace

TEST(Interval, LInstanceMinMaxBalancesTheSides) {
  const LocalOptimum o = minimize_interval(l_problem(Objective::min_max()));
  EXPECT_NEAR(o.value, 0.15 / std::sqrt(2.44), 1e-12);
  EXPECT_NEAR(o.ds, o.dt, 1e-12);
  EXPECT_NEAR(std::tan(o.theta), -1.2, 1e-9);
  EXPECT_EQ(o.at, OptimumAt::Interior);
}

TEST(Interval, LInstanceMinSumSitsAtTheRightEnd) {
  const LocalOptimum o = minimize_interval(l_problem(Objective::min_sum()));
  EXPECT_NEAR(o.value, 0.25 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(o.theta, 0.75 * kPi, 1e-12);
  EXPECT_EQ(o.at, OptimumAt::Right);
  EXPECT_NEAR(o.dt, 0.0, 1e-12);
  EXPECT_NEAR(distance(o.t_star, kT), 0.0, 1e-12);
  EXPECT_NEAR(distance(o.s_star, {0.375, 1.625}), 0.0, 1e-12);
}

TEST(Interval, EvaluateAtTheRangeEnds) {
  const IntervalProblem p = l_problem(Objective::min_max());
  const LegEvaluation hi = evaluate_at(p, p.theta_hi);
  EXPECT_NEAR(hi.ds, 0.25 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(hi.dt, 0.0, 1e-12);
  EXPECT_NEAR(distance(hi.t_star, kT), 0.0, 1e-12);
  const LegEvaluation lo = evaluate_at(p, p.theta_lo);
  EXPECT_NEAR(lo.ds, 0.0, 1e-12);
  // |cross((-0.5, 0.75), t - v)| / |(-0.5, 0.75)|
  EXPECT_NEAR(lo.dt, 0.1875 / std::sqrt(0.8125), 1e-12);
  EXPECT_NEAR(lo.dt, 0.208013, 1e-6);
}

TEST(Interval, AnchorsOnTheChordGivePrefixesOnly) {
  IntervalProblem p;
  p.pivot = {0.0, 0.0};
  p.s = foot({-1.0, 0.0}, 2.0);
  p.t = foot({3.0, 0.0}, 0.5);
  p.theta_lo = 0.0;
  p.theta_hi = 0.3;
  for (const Objective& obj : {Objective::min_max(), Objective::min_sum()}) {
    p.objective = obj;
    const LocalOptimum o = minimize_interval(p);
    EXPECT_DOUBLE_EQ(o.value, obj.combine(2.0, 0.5));
    EXPECT_EQ(o.theta, 0.0);
  }
}

TEST(Interval, EmptyRangeThrows) {
  IntervalProblem p = l_problem(Objective::min_max());
  std::swap(p.theta_lo, p.theta_hi);
  try {
    minimize_interval(p);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInterval);
  }
}

TEST(Interval, ZeroLengthRangeEvaluatesThePoint) {
  IntervalProblem p = l_problem(Objective::min_sum());
  p.theta_hi = p.theta_lo;
  const LocalOptimum o = minimize_interval(p);
  const LegEvaluation e = evaluate_at(p, p.theta_lo);
  EXPECT_EQ(o.theta, p.theta_lo);
  EXPECT_DOUBLE_EQ(o.value, e.ds + e.dt);
}

TEST(Interval, WeightedHalfIsHalfTheMinMax) {
  const LocalOptimum mm = minimize_interval(l_problem(Objective::min_max()));
  const LocalOptimum w = minimize_interval(l_problem(Objective::weighted(0.5)));
  EXPECT_NEAR(w.value, 0.5 * mm.value, 1e-13);
}

TEST(Interval, OffsetIsBracketedByMinMax) {
  const double mm = minimize_interval(l_problem(Objective::min_max())).value;
  const double off = minimize_interval(l_problem(Objective::offset(0.1, 0.0))).value;
  EXPECT_GE(off, mm - 1e-12);
  EXPECT_LE(off, mm + 0.1 + 1e-12);
  EXPECT_NEAR(off, sampled_min(l_problem(Objective::offset(0.1, 0.0)), 200000), 1e-6);
}

TEST(Interval, FootLegMatchesLineDistance) {
  const IntervalProblem p = l_problem(Objective::min_max());
  for (int k = 0; k <= 50; ++k) {
    const double th = p.theta_lo + (p.theta_hi - p.theta_lo) * k / 50;
    const LegEvaluation e = evaluate_at(p, th);
    EXPECT_NEAR(e.ds, line_distance(kS, th), 1e-13);
    EXPECT_NEAR(e.dt, line_distance(kT, th), 1e-13);
  }
}

TEST(Interval, EndLegFollowsTheSlidingEndpoint) {
  IntervalProblem p;
  p.pivot = {0.0, 0.0};
  p.s = foot({-1.0, 1.0});
  p.t.anchor = {2.0, 3.0};
  p.t.prefix = 0.25;
  p.t.leg = LegCase::EndPlus;
  p.t.edge = {{4.0, -1.0}, {4.0, 5.0}};  // the chord end slides along x = 4
  p.theta_lo = 0.1;
  p.theta_hi = 0.9;
  p.objective = Objective::min_sum();
  const double th = 0.5;
  const LegEvaluation e = evaluate_at(p, th);
  const Point x{4.0, 4.0 * std::tan(th)};
  EXPECT_NEAR(e.dt, 0.25 + distance({2.0, 3.0}, x), 1e-12);
  EXPECT_NEAR(distance(e.t_star, x), 0.0, 1e-12);
}

TEST(Interval, NeverBeatenBySampling) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0), pre(0.0, 2.0), ang(0.0, kPi);
  const Objective objs[] = {Objective::min_max(), Objective::min_sum(), Objective::weighted(0.3),
                            Objective::offset(0.4, 0.1)};
  for (int trial = 0; trial < 400; ++trial) {
    IntervalProblem p;
    p.pivot = {u(rng), u(rng)};
    auto leg = [&](LegCase c) {
      LegStructure l;
      l.anchor = {u(rng), u(rng)};
      l.prefix = pre(rng);
      l.leg = c;
      // An edge far enough away that the chord always meets its line.
      const Point m = p.pivot + Point{8.0, 0.0} * (c == LegCase::EndMinus ? -1.0 : 1.0);
      l.edge = {m + Point{0.0, -50.0}, m + Point{0.3, 50.0}};
      return l;
    };
    const LegCase cases[] = {LegCase::Foot, LegCase::EndMinus, LegCase::EndPlus};
    p.s = leg(cases[trial % 3]);
    p.t = leg(cases[(trial / 3) % 3]);
    const double a = ang(rng) * 0.5 - 0.25 * kPi;  // keep away from the edge direction
    p.theta_lo = a;
    p.theta_hi = a + 0.5 * ang(rng) * 0.5;
    p.objective = objs[trial % 4];
    const LocalOptimum o = minimize_interval(p);
    const LegEvaluation e = evaluate_at(p, o.theta);
    EXPECT_DOUBLE_EQ(o.value, p.objective.combine(e.ds, e.dt));
    EXPECT_LE(o.value, sampled_min(p, 1000) + 1e-12) << "trial " << trial;
    EXPECT_GE(o.theta, p.theta_lo);
    EXPECT_LE(o.theta, p.theta_hi);
  }
}
