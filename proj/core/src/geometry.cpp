#include "pairvis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <gmpxx.h>

namespace pairvis {
namespace {

// Relative error bound for a 2x2 determinant whose entries are rounded
// differences of doubles (Shewchuk's ccwerrboundA).
constexpr double kDetErrBound = 3.3306690738754716e-16;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

int sign(const mpq_class& v) { return sgn(v); }

int exact_cross_sign(Point a, Point b, Point c, Point d) {
  const mpq_class ux = mpq_class(b.x) - mpq_class(a.x);
  const mpq_class uy = mpq_class(b.y) - mpq_class(a.y);
  const mpq_class vx = mpq_class(d.x) - mpq_class(c.x);
  const mpq_class vy = mpq_class(d.y) - mpq_class(c.y);
  const mpq_class det = ux * vy - uy * vx;
  return sign(det);
}

int exact_dot_sign(Point a, Point b, Point c, Point d) {
  const mpq_class ux = mpq_class(b.x) - mpq_class(a.x);
  const mpq_class uy = mpq_class(b.y) - mpq_class(a.y);
  const mpq_class vx = mpq_class(d.x) - mpq_class(c.x);
  const mpq_class vy = mpq_class(d.y) - mpq_class(c.y);
  const mpq_class v = ux * vx + uy * vy;
  return sign(v);
}

}  // namespace

int cross_sign(Point a, Point b, Point c, Point d) {
  const double l = (b.x - a.x) * (d.y - c.y);
  const double r = (b.y - a.y) * (d.x - c.x);
  const double det = l - r;
  const double bound = kDetErrBound * (std::fabs(l) + std::fabs(r));
  if (det > bound || -det > bound) return sign(det);
  return exact_cross_sign(a, b, c, d);
}

int dot_sign(Point a, Point b, Point c, Point d) {
  const double l = (b.x - a.x) * (d.x - c.x);
  const double r = (b.y - a.y) * (d.y - c.y);
  const double v = l + r;
  const double bound = kDetErrBound * (std::fabs(l) + std::fabs(r));
  if (v > bound || -v > bound) return sign(v);
  return exact_dot_sign(a, b, c, d);
}

Orientation orientation(Point p, Point q, Point r) {
  return static_cast<Orientation>(cross_sign(p, q, p, r));
}

int compare_distance(Point p, Point a, Point b) {
  const double da = (a.x - p.x) * (a.x - p.x) + (a.y - p.y) * (a.y - p.y);
  const double db = (b.x - p.x) * (b.x - p.x) + (b.y - p.y) * (b.y - p.y);
  const double bound = 8.0 * kDetErrBound * (da + db);
  if (da - db > bound) return 1;
  if (db - da > bound) return -1;
  const mpq_class ax = mpq_class(a.x) - mpq_class(p.x);
  const mpq_class ay = mpq_class(a.y) - mpq_class(p.y);
  const mpq_class bx = mpq_class(b.x) - mpq_class(p.x);
  const mpq_class by = mpq_class(b.y) - mpq_class(p.y);
  const mpq_class diff = ax * ax + ay * ay - bx * bx - by * by;
  return sign(diff);
}

bool on_segment(Point p, Point q, Point r) {
  if (orientation(p, q, r) != Orientation::Collinear) return false;
  if (p == q) return r == p;
  // r is between p and q iff (r - p).(q - p) >= 0 and (r - q).(p - q) >= 0.
  return dot_sign(p, r, p, q) >= 0 && dot_sign(q, r, q, p) >= 0;
}

bool segments_cross_properly(const Segment& s1, const Segment& s2) {
  const auto o1 = orientation(s1.a, s1.b, s2.a);
  const auto o2 = orientation(s1.a, s1.b, s2.b);
  const auto o3 = orientation(s2.a, s2.b, s1.a);
  const auto o4 = orientation(s2.a, s2.b, s1.b);
  return sign_of(o1) * sign_of(o2) < 0 && sign_of(o3) * sign_of(o4) < 0;
}

std::optional<Point> line_intersection(Point p, Point u, Point q, Point v) {
  const double den = cross(u, v);
  if (den == 0.0) return std::nullopt;
  const double t = cross(q - p, v) / den;
  return p + u * t;
}

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
  SegmentIntersection out;
  const auto o1 = sign_of(orientation(s1.a, s1.b, s2.a));
  const auto o2 = sign_of(orientation(s1.a, s1.b, s2.b));
  const auto o3 = sign_of(orientation(s2.a, s2.b, s1.a));
  const auto o4 = sign_of(orientation(s2.a, s2.b, s1.b));

  if (o1 == 0 && o2 == 0) {
    // Collinear: project everything on the dominant axis of s1.
    const Point d = s1.b - s1.a;
    auto key = [&](Point p) { return dot(p - s1.a, d); };
    Point lo1 = s1.a, hi1 = s1.b;
    Point lo2 = s2.a, hi2 = s2.b;
    if (key(lo2) > key(hi2)) std::swap(lo2, hi2);
    const Point lo = key(lo1) >= key(lo2) ? lo1 : lo2;
    const Point hi = key(hi1) <= key(hi2) ? hi1 : hi2;
    // Decide containment exactly.
    const bool lo_ok = on_segment(s1.a, s1.b, lo) && on_segment(s2.a, s2.b, lo);
    const bool hi_ok = on_segment(s1.a, s1.b, hi) && on_segment(s2.a, s2.b, hi);
    if (!lo_ok || !hi_ok) return out;
    if (lo == hi) {
      out.kind = IntersectionKind::Point;
      out.p = out.q = lo;
      out.touching = true;
      return out;
    }
    out.kind = IntersectionKind::Overlap;
    out.p = lo;
    out.q = hi;
    return out;
  }

  if (o1 * o2 > 0 || o3 * o4 > 0) return out;

  out.kind = IntersectionKind::Point;
  if (o1 == 0) {
    out.p = s2.a;
  } else if (o2 == 0) {
    out.p = s2.b;
  } else if (o3 == 0) {
    out.p = s1.a;
  } else if (o4 == 0) {
    out.p = s1.b;
  } else {
    out.p = *line_intersection(s1.a, s1.b - s1.a, s2.a, s2.b - s2.a);
  }
  out.q = out.p;
  out.touching = (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0);
  return out;
}

double point_line_distance(Point p, Point through, Point dir) {
  return std::fabs(cross(p - through, dir));
}

Point project_onto_line(Point p, Point through, Point dir) {
  const double dd = dot(dir, dir);
  if (dd == 0.0) return through;
  return through + dir * (dot(p - through, dir) / dd);
}

Point closest_point_on_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double dd = dot(d, d);
  if (dd == 0.0) return s.a;
  const double t = std::clamp(dot(p - s.a, d) / dd, 0.0, 1.0);
  return s.at(t);
}

}  // namespace pairvis
