#pragma once

#include "pairvis/objective.hpp"
#include "pairvis/sweep.hpp"

namespace pairvis {

// Lines of sight between two consecutive events: every chord passes through
// `pivot` with direction angle theta in [theta_lo, theta_hi], and each side
// reaches it through a fixed anchor, either perpendicularly or at the chord
// end sliding along a fixed boundary edge.
struct IntervalProblem {
  Point pivot;
  LegStructure s, t;
  double theta_lo = 0.0, theta_hi = 0.0;
  Objective objective;
};

enum class OptimumAt { Interior, Left, Right };

struct LegEvaluation {
  double ds = 0.0, dt = 0.0;
  Point s_star, t_star;
};

struct LocalOptimum {
  double theta = 0.0;
  double value = 0.0;
  double ds = 0.0, dt = 0.0;
  Point s_star, t_star;
  OptimumAt at = OptimumAt::Interior;
};

LegEvaluation evaluate_at(const IntervalProblem& prob, double theta);

// Global minimum over the closed range. Throws Error(EmptyInterval) when
// theta_lo > theta_hi. Ties keep the smallest theta.
LocalOptimum minimize_interval(const IntervalProblem& prob);

}  // namespace pairvis
