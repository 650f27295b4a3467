#include "pairvis/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairvis/errors.hpp"

namespace pairvis {
namespace {

std::string edge_pair_message(std::size_t i, std::size_t j) {
  return "polygon is not simple: edges " + std::to_string(i) + " and " +
         std::to_string(j) + " intersect";
}

// Edges i and j (i < j) of an n-gon; adjacent edges share exactly one
// vertex and may not fold back onto each other.
bool edges_conflict(std::span<const Point> v, std::size_t i, std::size_t j) {
  const std::size_t n = v.size();
  const Segment ei{v[i], v[(i + 1) % n]};
  const Segment ej{v[j], v[(j + 1) % n]};
  const bool adjacent_fwd = (i + 1) % n == j;
  const bool adjacent_bwd = (j + 1) % n == i;
  if (adjacent_fwd || adjacent_bwd) {
    // Shared vertex is ei.b (== ej.a) or ej.b (== ei.a).
    const Point shared = adjacent_fwd ? ei.b : ei.a;
    const Point other_i = adjacent_fwd ? ei.a : ei.b;
    const Point other_j = adjacent_fwd ? ej.b : ej.a;
    if (orientation(other_i, shared, other_j) != Orientation::Collinear) return false;
    // Collinear: a fold-back means the two far ends lie on the same side.
    return dot_sign(shared, other_i, shared, other_j) > 0;
  }
  return segments_intersect(ei, ej).kind != IntersectionKind::None;
}

void check_simple(std::span<const Point> v) {
  const std::size_t n = v.size();
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (edges_conflict(v, i, j)) throw Error(ErrorCode::NotSimple, edge_pair_message(i, j));
    return;
  }

  // Uniform grid over the bounding box; each edge is registered in every
  // cell its bounding box overlaps.
  Point lo = v[0], hi = v[0];
  for (Point p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const double w = std::max(hi.x - lo.x, 1e-300);
  const double h = std::max(hi.y - lo.y, 1e-300);
  auto cell_x = [&](double x) {
    return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (x - lo.x) / w * side)));
  };
  auto cell_y = [&](double y) {
    return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (y - lo.y) / h * side)));
  };
  std::vector<std::vector<std::size_t>> cells(side * side);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    const std::size_t x0 = cell_x(std::min(a.x, b.x)), x1 = cell_x(std::max(a.x, b.x));
    const std::size_t y0 = cell_y(std::min(a.y, b.y)), y1 = cell_y(std::max(a.y, b.y));
    for (std::size_t cy = y0; cy <= y1; ++cy)
      for (std::size_t cx = x0; cx <= x1; ++cx) cells[cy * side + cx].push_back(i);
  }
  for (const auto& cell : cells) {
    for (std::size_t a = 0; a < cell.size(); ++a)
      for (std::size_t b = a + 1; b < cell.size(); ++b) {
        const std::size_t i = std::min(cell[a], cell[b]);
        const std::size_t j = std::max(cell[a], cell[b]);
        if (edges_conflict(v, i, j)) throw Error(ErrorCode::NotSimple, edge_pair_message(i, j));
      }
  }
}

}  // namespace

SimplePolygon SimplePolygon::validate_and_normalize(std::vector<Point> ring) {
  if (ring.size() < 3)
    throw Error(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
  for (const Point& p : ring)
    if (!is_finite(p)) throw Error(ErrorCode::InvalidInput, "polygon coordinate is not finite");
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring[i] == ring[(i + 1) % ring.size()])
      throw Error(ErrorCode::InvalidInput,
                  "duplicate consecutive vertex at index " + std::to_string(i));

  double twice_area = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    twice_area += cross(ring[i], ring[(i + 1) % ring.size()]);

  SimplePolygon poly;
  if (twice_area < 0.0) {
    std::reverse(ring.begin(), ring.end());
    poly.reversed_ = true;
    twice_area = -twice_area;
  }
  check_simple(ring);
  if (!(twice_area > 0.0))
    throw Error(ErrorCode::NotSimple, "polygon has zero area");

  poly.vertices_ = std::move(ring);
  poly.area_ = 0.5 * twice_area;
  const std::size_t n = poly.vertices_.size();
  poly.reflex_.resize(n);
  Point lo = poly.vertices_[0], hi = poly.vertices_[0];
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly.vertices_[i];
    poly.reflex_[i] = orientation(poly.vertices_[poly.prev(i)], p, poly.vertices_[poly.next(i)]) ==
                      Orientation::CW;
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  poly.bounds_ = {lo, hi};
  return poly;
}

PointClass SimplePolygon::classify(Point p) const {
  bool inside = false;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices_[i];
    const Point b = vertices_[next(i)];
    if (on_segment(a, b, p)) return PointClass::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const auto o = orientation(a, b, p);
      if ((b.y > a.y) ? o == Orientation::CCW : o == Orientation::CW) inside = !inside;
    }
  }
  return inside ? PointClass::Inside : PointClass::Outside;
}

bool SimplePolygon::direction_enters(std::size_t i, Point origin, Point through) const {
  const Point w = vertices_[i];
  const Point p = vertices_[prev(i)];
  const Point q = vertices_[next(i)];
  const int left_of_out = cross_sign(w, q, origin, through);   // cross(q - w, d)
  const int right_of_in = cross_sign(origin, through, w, p);   // cross(d, p - w)
  if (!reflex_[i]) return left_of_out >= 0 && right_of_in >= 0;
  return !(left_of_out < 0 && right_of_in < 0);
}

}  // namespace pairvis
