#pragma once

#include <optional>
#include <vector>

#include "pairvis/interval.hpp"
#include "pairvis/objective.hpp"
#include "pairvis/sweep.hpp"

namespace pairvis {

struct SolveResult {
  double value = 0.0;
  double ds = 0.0, dt = 0.0;  // geodesic lengths |pi(s,s*)| and |pi(t,t*)|
  Point s_star, t_star;
  Chord chord;
  std::optional<Point> pivot;
  std::size_t pivot_index = 0;  // index into pi(s,t); 0 when s and t see each other
  Point through;                // with the pivot, fixes the chord line exactly
  double theta = 0.0;           // chord direction in [0, pi)
  GeodesicPath path_s, path_t;
  std::size_t interval_id = 0;
  bool visible = false;
};

struct SolveTrace {
  SolveResult result;
  EventSequence events;
  // One entry per stretch between consecutive events.
  std::vector<SweepPiece> pieces;
  std::vector<std::size_t> piece_pivot;
  std::vector<LocalOptimum> optima;
};

// Throws Error(OutsidePolygon) when s or t lies outside.
SolveResult solve(const Triangulation& tri, Point s, Point t, const Objective& obj);
SolveResult solve(const SimplePolygon& poly, Point s, Point t, const Objective& obj);
SolveTrace solve_with_trace(const Triangulation& tri, Point s, Point t, const Objective& obj);

// Problem for one piece of an interval, in absolute chord angles.
IntervalProblem make_problem(const SweepGeometry& g, std::size_t pivot, const SweepPiece& piece,
                             const Objective& obj);
// Rotation parameter of the absolute angle theta at the pivot.
double phi_from_theta(const SweepGeometry& g, std::size_t pivot, double theta);
double theta_from_phi(const SweepGeometry& g, std::size_t pivot, double phi);

}  // namespace pairvis
