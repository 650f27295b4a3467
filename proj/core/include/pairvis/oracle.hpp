#pragma once

#include <cstdint>
#include <vector>

#include "pairvis/geodesics.hpp"
#include "pairvis/objective.hpp"
#include "pairvis/polygon.hpp"

namespace pairvis {

struct OracleConfig {
  /// Uniform chord directions per pivot; directions toward every polygon
  /// vertex are always added on top.
  int angular_samples = 100000;
  /// Golden-section refinement around the best samples.
  bool refine = true;
  int refine_candidates = 6;
  /// Slack for deciding that a floating point lies on the boundary.
  double boundary_tolerance = 1e-12;
};

struct OracleResult {
  double value = 0.0;
  /// Sampling-density bound: the exact optimum lies in [value - bound, value].
  double error_bound = 0.0;
  bool visible = false;
  Point s_star;
  Point t_star;
  Segment chord;
  /// Index of the pivot in the oracle's own s-t path.
  std::size_t pivot = 0;
  double ds = 0.0;
  double dt = 0.0;
  std::size_t evaluations = 0;
};

/// Brute-force geometry on a polygon: naive visibility against every edge,
/// visibility-graph Dijkstra, and ray casting. Shares no code with the
/// triangulation-based modules.
class OracleGeometry {
 public:
  explicit OracleGeometry(const SimplePolygon& polygon, double boundary_tolerance = 1e-12);

  const SimplePolygon& polygon() const { return polygon_; }

  bool visible(Point p, Point q) const;

  /// Geodesic distance from `src` to every polygon vertex, and the tree
  /// parent of each (n == source).
  std::vector<double> distances_from(Point src, std::vector<std::size_t>* parent = nullptr) const;

  GeodesicPath shortest_path(Point p, Point q) const;

  /// Maximal segment of P through `anchor` with direction `dir`.
  Segment chord(Point anchor, Point dir) const;

  /// Geodesic distance from `src` to segment `seg`, given distances from
  /// `src` to all vertices. Returns the closest point through `closest`.
  double distance_to_segment(Point src, const std::vector<double>& dist, const Segment& seg,
                             Point* closest = nullptr) const;

 private:
  bool inside_tolerant(Point p) const;
  // As above, but the slack only applies near edges running parallel to `dir`:
  // a segment grazing along the boundary is kept, one clipping a corner is not.
  bool inside_along(Point p, Point dir) const;
  double ray_exit(Point origin, Point dir) const;

  SimplePolygon polygon_;
  double tol_;
  double scale_;
  std::vector<std::vector<char>> vis_;  // vertex-vertex visibility
};

GeodesicPath oracle_shortest_path(const SimplePolygon& polygon, Point p, Point q);

OracleResult oracle_solve(const SimplePolygon& polygon, Point s, Point t, const Objective& obj,
                          const OracleConfig& cfg = {});

/// Objective value of a given witness chord, evaluated independently.
double oracle_evaluate_chord(const OracleGeometry& geo, Point s, Point t, const Segment& chord,
                             const Objective& obj);

}  // namespace pairvis
