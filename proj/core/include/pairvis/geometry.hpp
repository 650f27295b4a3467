#pragma once

// Planar primitives and robust predicates.
//
// Predicates (orientation, side tests, intersection classification) are
// decided exactly: a floating-point filter answers almost every call and a
// rational fallback settles the rest. Constructions (intersection points,
// distances) are plain double arithmetic.

#include <cmath>
#include <optional>
#include <ostream>

namespace pairvis {

struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point() = default;
  constexpr Point(double px, double py) : x(px), y(py) {}

  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator-() const { return {-x, -y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point&) const = default;
};

inline constexpr Point operator*(double s, Point p) { return p * s; }

inline std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

inline constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Point perp(Point a) { return {-a.y, a.x}; }  // rotated +90 degrees

inline Point normalized(Point a) {
  const double n = norm(a);
  return n > 0.0 ? a / n : a;
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Unit direction of angle theta (radians).
inline Point direction_of(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
  bool degenerate() const { return a == b; }
  Point at(double t) const { return a + (b - a) * t; }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

inline int sign_of(Orientation o) { return static_cast<int>(o); }

/// Sign of the signed area of triangle pqr, decided exactly.
Orientation orientation(Point p, Point q, Point r);

/// Exact sign of cross(b - a, d - c).
int cross_sign(Point a, Point b, Point c, Point d);

/// Exact sign of dot(b - a, d - c).
int dot_sign(Point a, Point b, Point c, Point d);

/// Exact comparison of |a - p|^2 against |b - p|^2 (-1, 0, +1).
int compare_distance(Point p, Point a, Point b);

/// True when r lies on the closed segment pq (exact).
bool on_segment(Point p, Point q, Point r);

enum class IntersectionKind { None, Point, Overlap };

struct SegmentIntersection {
  IntersectionKind kind = IntersectionKind::None;
  Point p;  // the point, or the first end of the overlap
  Point q;  // second end of the overlap (equals p for a point)
  // For a point intersection: true when the point is an endpoint of either
  // segment (a touch rather than a proper crossing).
  bool touching = false;
};

/// Exact classification of how two non-degenerate segments meet. The
/// reported coordinates are floating-point constructions.
SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

/// True when the open interiors of the segments cross at a single point
/// that is interior to both (exact).
bool segments_cross_properly(const Segment& s1, const Segment& s2);

/// Distance from p to the line through `through` with unit direction `dir`.
double point_line_distance(Point p, Point through, Point dir);

/// Orthogonal projection of p onto the line through `through` along `dir`
/// (dir need not be unit).
Point project_onto_line(Point p, Point through, Point dir);

/// Closest point to p on the closed segment.
Point closest_point_on_segment(Point p, const Segment& s);

/// Intersection of the lines (p, p + u) and (q, q + v); empty if parallel.
std::optional<Point> line_intersection(Point p, Point u, Point q, Point v);

}  // namespace pairvis
