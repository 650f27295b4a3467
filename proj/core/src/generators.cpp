#include "pairvis/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pairvis/errors.hpp"

namespace pairvis {
namespace {

std::vector<Point> random_points(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

// Appends a chain from a (exclusive) to b (inclusive) through all of `pts`,
// which lie in a convex region bounded on one side by segment ab.
void chain(Point a, Point b, std::vector<Point> pts, std::mt19937_64& rng, std::vector<Point>& out) {
  while (!pts.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const std::size_t k = pick(rng);
    const Point c = pts[k];
    pts[k] = pts.back();
    pts.pop_back();
    const double lambda = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Point r = a + (b - a) * lambda;
    const int a_side = sign_of(orientation(c, r, a));
    std::vector<Point> near_a, near_b;
    for (Point p : pts) (sign_of(orientation(c, r, p)) == a_side ? near_a : near_b).push_back(p);
    chain(a, c, std::move(near_a), rng, out);
    a = c;
    pts = std::move(near_b);
  }
  out.push_back(b);
}

std::vector<Point> space_partition_polygon(std::size_t n, std::mt19937_64& rng) {
  auto pts = random_points(n, rng);
  std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  const Point a = pts.front(), b = pts.back();
  std::vector<Point> lower, upper;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    (orientation(a, b, pts[i]) == Orientation::CW ? lower : upper).push_back(pts[i]);
  std::vector<Point> ring{a};
  chain(a, b, std::move(lower), rng, ring);
  chain(b, a, std::move(upper), rng, ring);
  ring.pop_back();  // a closes the ring
  return ring;
}

template <class Build>
std::vector<Point> first_valid(std::uint64_t seed, Build build) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto ring = build(rng);
    try {
      SimplePolygon::validate_and_normalize(ring);
      return ring;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InternalError, "generator failed to produce a simple polygon");
}

}  // namespace

std::vector<Point> random_simple_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "need at least 3 vertices");
  return first_valid(seed, [n](std::mt19937_64& rng) { return space_partition_polygon(n, rng); });
}

std::vector<Point> random_two_opt_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "need at least 3 vertices");
  return first_valid(seed, [n](std::mt19937_64& rng) {
    auto ring = random_points(n, rng);
    // Reverse the path between any two properly crossing edges until none
    // remain; each move strictly shortens the tour, so this terminates.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n && !changed; ++i)
        for (std::size_t j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          const Segment e1{ring[i], ring[i + 1]}, e2{ring[j], ring[(j + 1) % n]};
          if (segments_cross_properly(e1, e2)) {
            std::reverse(ring.begin() + static_cast<std::ptrdiff_t>(i + 1),
                         ring.begin() + static_cast<std::ptrdiff_t>(j + 1));
            changed = true;
          }
        }
    }
    return ring;
  });
}

std::vector<Point> random_convex_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "need at least 3 vertices");
  return first_valid(seed, [n](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<double> angles(n);
    for (auto& a : angles) a = u(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> ring;
    for (double a : angles) ring.push_back(Point{500.0, 500.0} + direction_of(a) * 500.0);
    return ring;
  });
}

Point random_point_in(const SimplePolygon& polygon, std::mt19937_64& rng) {
  const auto& box = polygon.bounds();
  std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x), uy(box.lo.y, box.hi.y);
  for (;;) {
    const Point p{ux(rng), uy(rng)};
    if (polygon.classify(p) == PointClass::Inside) return p;
  }
}

}  // namespace pairvis
