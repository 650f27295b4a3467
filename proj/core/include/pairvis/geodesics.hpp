#pragma once

#include <cstdint>
#include <vector>

#include "pairvis/triangulation.hpp"

namespace pairvis {

/// Polyline realization of a geodesic. `ids[i]` is the polygon vertex at
/// points[i], or kNone for a free endpoint.
struct GeodesicPath {
  std::vector<Point> points;
  std::vector<std::uint32_t> ids;
  double length = 0.0;

  Point front() const { return points.front(); }
  Point back() const { return points.back(); }
  std::size_t size() const { return points.size(); }
};

/// Shortest path from p to q inside P (funnel over the dual-tree sleeve).
GeodesicPath shortest_path(const Triangulation& tri, Point p, Point q);

/// Same with known locations (e.g. from ray hits).
GeodesicPath shortest_path(const Triangulation& tri, Point p, const Location& lp, Point q,
                           const Location& lq);

/// Shortest path tree of every polygon vertex from a root point. Keeps a
/// reference to `tri`, which must outlive it.
class ShortestPathTree {
 public:
  /// Parent value meaning "the root point itself".
  static constexpr std::uint32_t kRoot = kNone - 1;

  ShortestPathTree(const Triangulation& tri, Point root);

  const Triangulation& triangulation() const { return *tri_; }
  Point root() const { return root_; }
  /// Polygon vertex the root coincides with, or kNone.
  std::uint32_t root_vertex() const { return root_vertex_; }

  std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
  double distance(std::uint32_t v) const { return dist_[v]; }
  std::uint32_t depth(std::uint32_t v) const { return depth_[v]; }

  /// Position of a tree node (a polygon vertex or kRoot).
  Point point_of(std::uint32_t node) const;
  double distance_of(std::uint32_t node) const;

  /// Last tree node before p on the geodesic root -> p; kRoot when p sees
  /// the root. For p == root returns kRoot as well.
  std::uint32_t predecessor(Point p) const;
  std::uint32_t predecessor(Point p, const Location& loc) const;

  double distance_to(Point p) const;
  double distance_to(Point p, const Location& loc) const;
  GeodesicPath path_to(Point p) const;
  GeodesicPath path_to(Point p, const Location& loc) const;
  GeodesicPath path_to_vertex(std::uint32_t v) const;

  /// Edge of triangle t through which geodesics from the root enter it;
  /// -1 for the triangle containing the root.
  int entry_edge(std::uint32_t t) const { return entry_[t]; }
  std::uint32_t root_triangle() const { return root_tri_; }

 private:
  GeodesicPath path_from_node(std::uint32_t node, Point tail, bool add_tail) const;
  std::uint32_t node_id(std::uint32_t node) const;

  const Triangulation* tri_;
  Point root_;
  std::uint32_t root_vertex_ = kNone;
  std::uint32_t root_tri_ = kNone;
  std::vector<std::uint32_t> parent_;
  std::vector<double> dist_;
  std::vector<std::uint32_t> depth_;
  std::vector<int> entry_;
};

/// One cell of a shortest path map: a convex piece of a triangle whose
/// points all have the same geodesic predecessor.
struct SpmCell {
  std::vector<Point> polygon;
  std::uint32_t triangle = kNone;
  std::uint32_t predecessor = ShortestPathTree::kRoot;
};

/// A tree edge (parent -> vertex) extended past `vertex` until it hits the
/// boundary at `hit`.
struct ExtensionEdge {
  std::uint32_t vertex = kNone;
  std::uint32_t parent = ShortestPathTree::kRoot;
  RayHit hit;
};

/// Shortest path map: the tree plus its cell decomposition.
class ShortestPathMap {
 public:
  explicit ShortestPathMap(const ShortestPathTree& spt);

  const ShortestPathTree& tree() const { return *spt_; }
  const std::vector<SpmCell>& cells() const { return cells_; }
  const std::vector<ExtensionEdge>& extensions() const { return extensions_; }

  std::uint32_t predecessor(Point p) const { return spt_->predecessor(p); }

 private:
  const ShortestPathTree* spt_;
  std::vector<SpmCell> cells_;
  std::vector<ExtensionEdge> extensions_;
};

/// Geodesic distance from a point to a segment, with its witness.
struct SegmentDistance {
  double distance = 0.0;
  Point closest;
  /// Last path vertex before `closest`; equals the source when visible.
  Point anchor;
  std::uint32_t anchor_id = kNone;
  GeodesicPath path;
};

/// Minimum over the segment given geodesics from a common source to both
/// segment ends. The segment must lie in P.
SegmentDistance distance_to_segment(const GeodesicPath& to_a, const GeodesicPath& to_b);

SegmentDistance distance_to_segment(const Triangulation& tri, Point p, const Segment& seg);
SegmentDistance distance_to_segment(const ShortestPathTree& spt, const Segment& seg);

/// Chord versions reuse the locations found by the ray walks.
SegmentDistance distance_to_segment(const Triangulation& tri, Point p, const Chord& chord);
SegmentDistance distance_to_segment(const ShortestPathTree& spt, const Chord& chord);

}  // namespace pairvis
