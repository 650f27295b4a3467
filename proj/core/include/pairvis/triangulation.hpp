#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pairvis/polygon.hpp"

namespace pairvis {

inline constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

/// Counter-clockwise triangle of polygon vertex indices. Neighbor k lies
/// across the edge (v[k], v[k+1]); kNone marks a polygon edge.
struct Triangle {
  std::array<std::uint32_t, 3> v{};
  std::array<std::uint32_t, 3> nbr{kNone, kNone, kNone};

  int index_of(std::uint32_t vertex) const {
    for (int k = 0; k < 3; ++k)
      if (v[k] == vertex) return k;
    return -1;
  }
};

enum class LocationKind { Interior, Edge, Vertex };

/// Result of point location. `triangle` always contains the point (closed).
/// For Edge, `edge` is the local edge index inside `triangle`; for Vertex,
/// `vertex` is the polygon vertex index.
struct Location {
  LocationKind kind = LocationKind::Interior;
  std::uint32_t triangle = kNone;
  int edge = -1;
  std::uint32_t vertex = kNone;
  bool on_boundary = false;
};

/// First boundary point hit by a ray. Either the interior of polygon edge
/// `edge` or polygon vertex `vertex` (exactly one is set). `triangle` is a
/// triangle whose closure contains the hit point.
struct RayHit {
  Point point;
  std::uint32_t edge = kNone;
  std::uint32_t vertex = kNone;
  std::uint32_t triangle = kNone;
  // Set when a visibility walk reached its target before leaving P.
  bool reached_target = false;
};

/// Maximal segment of P through an anchor point, together with the boundary
/// features its ends lie on.
struct Chord {
  Point a;  // end reached against the direction
  Point b;  // end reached along the direction
  RayHit hit_a;
  RayHit hit_b;

  Segment segment() const { return {a, b}; }
};

/// Triangulation of a simple polygon with its dual tree. The dual tree is
/// rooted at triangle 0 so that sleeves can be extracted by climbing.
class Triangulation {
 public:
  explicit Triangulation(const SimplePolygon& polygon);

  /// Rebuild from a stored triangle list (validated against the polygon).
  Triangulation(const SimplePolygon& polygon, std::vector<std::array<std::uint32_t, 3>> tris);

  const SimplePolygon& polygon() const { return polygon_; }
  const std::vector<Triangle>& triangles() const { return tris_; }
  std::size_t size() const { return tris_.size(); }
  const Triangle& triangle(std::uint32_t t) const { return tris_[t]; }

  /// Triangles incident to polygon vertex i, in counter-clockwise order
  /// around it starting at the one containing edge (i, i+1).
  const std::vector<std::uint32_t>& fan(std::uint32_t vertex) const { return fans_[vertex]; }

  std::uint32_t dual_parent(std::uint32_t t) const { return parent_[t]; }
  std::uint32_t dual_depth(std::uint32_t t) const { return depth_[t]; }

  /// Triangles on the dual-tree path from `from` to `to`, inclusive.
  std::vector<std::uint32_t> sleeve(std::uint32_t from, std::uint32_t to) const;

  /// Point location. Throws Error(OutsidePolygon) if p is not in P.
  Location locate(Point p) const;

  /// Location of a ray hit, taken from the walk rather than recomputed, so
  /// rounded hit points slightly outside P stay usable.
  Location location_of(const RayHit& hit) const;

  /// Ray from `origin` (a point of P) through `through`. Passing exactly
  /// through a reflex vertex or running along the boundary does not stop
  /// the ray; it stops where it would leave P.
  RayHit ray_shoot(Point origin, Point through) const;

  /// Same ray, starting at polygon vertex `vertex` (origin == its position).
  RayHit ray_shoot_from_vertex(std::uint32_t vertex, Point through) const;

  /// Continuation of the directed line from -> vertex beyond the vertex.
  RayHit extend_through_vertex(Point from, std::uint32_t vertex) const;

  /// Closed visibility: true iff segment pq lies in P.
  bool is_visible(Point p, Point q) const;

  /// Maximal segment through `anchor` parallel to `dir`.
  Chord maximal_chord(Point anchor, Point dir) const;

  /// Maximal segment through polygon vertex `vertex` and the point `through`.
  Chord maximal_chord_at_vertex(std::uint32_t vertex, Point through) const;

 private:
  struct Walk;

  void build_adjacency();
  RayHit walk(Walk& w, Point start) const;
  RayHit walk_from_vertex(Walk& w, std::uint32_t vertex) const;
  RayHit walk_from_triangle(Walk& w, std::uint32_t tri, int entry_edge) const;

  SimplePolygon polygon_;
  std::vector<Triangle> tris_;
  std::vector<std::vector<std::uint32_t>> fans_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> depth_;
};

/// Monotone-decomposition triangulation; returns n - 2 CCW triangles.
std::vector<std::array<std::uint32_t, 3>> triangulate(const SimplePolygon& polygon);

}  // namespace pairvis
