#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pairvis/triangulation.hpp"

namespace pairvis {

struct QueryAnswer {
  double value = 0.0;
  double ds = 0.0, dt = 0.0;
  Point s_star, t_star;
  Chord chord;
  std::optional<Point> pivot;
  std::size_t pivot_index = 0;  // index into pi(s,t) of the pivot bracketed by the path-edge search
  Point through;
  double theta = 0.0;
  bool visible = false;
};

// Min-max quickest pair-visibility queries on a fixed polygon. Geodesic
// subroutines run funnels over sleeves, so a query costs O(n log n) worst case.
class QueryStructure {
 public:
  explicit QueryStructure(const SimplePolygon& polygon) : tri_(polygon) {}
  // Rebuilds from a stored triangulation; throws Error(InvalidInput) if inconsistent.
  QueryStructure(const SimplePolygon& polygon, std::vector<std::array<std::uint32_t, 3>> tris)
      : tri_(polygon, std::move(tris)) {}

  const SimplePolygon& polygon() const { return tri_.polygon(); }
  const Triangulation& triangulation() const { return tri_; }

  // Throws Error(OutsidePolygon) when s or t lies outside.
  QueryAnswer query_minmax(Point s, Point t) const;

 private:
  Triangulation tri_;
};

}  // namespace pairvis
