#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pairvis/geometry.hpp"

namespace pairvis {

enum class PointClass { Outside, Boundary, Inside };

struct BoundingBox {
  Point lo;
  Point hi;

  double diagonal() const { return distance(lo, hi); }
};

/// A validated simple polygon with counter-clockwise vertex order. The
/// boundary belongs to the polygon. Immutable after construction.
class SimplePolygon {
 public:
  /// Validates the ring and orients it counter-clockwise. Throws
  /// Error(TooFewVertices | NotSimple | InvalidInput).
  static SimplePolygon validate_and_normalize(std::vector<Point> ring);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point> vertices() const { return vertices_; }
  Point vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }

  /// Edge i runs from vertex i to vertex i + 1.
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[next(i)]}; }

  /// Interior angle strictly greater than pi.
  bool is_reflex(std::size_t i) const { return reflex_[i]; }

  /// True when the polygon was given clockwise and got reversed.
  bool was_reversed() const { return reversed_; }

  double area() const { return area_; }
  const BoundingBox& bounds() const { return bounds_; }

  /// Exact point-in-polygon classification (boundary reported separately).
  PointClass classify(Point p) const;
  bool contains(Point p) const { return classify(p) != PointClass::Outside; }

  /// True when the direction `dir` (given as the vector through - origin)
  /// points into the closed interior cone at vertex i, i.e. points
  /// vertex(i) + eps * dir lie in P for small eps > 0.
  bool direction_enters(std::size_t i, Point origin, Point through) const;

 private:
  SimplePolygon() = default;

  std::vector<Point> vertices_;
  std::vector<bool> reflex_;
  double area_ = 0.0;
  BoundingBox bounds_;
  bool reversed_ = false;
};

}  // namespace pairvis
