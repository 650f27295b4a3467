#include "pairvis/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pairvis/errors.hpp"

namespace pairvis {
namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

int next3(int k) { return k == 2 ? 0 : k + 1; }
int prev3(int k) { return k == 0 ? 2 : k - 1; }

}  // namespace

// A directed line (a -> b) along which a ray travels, plus an optional
// target point for visibility queries.
struct Triangulation::Walk {
  Point a;
  Point b;
  std::optional<Point> target;

  // > 0 when p lies left of the directed line.
  int side(Point p) const { return cross_sign(a, b, a, p); }
};

Triangulation::Triangulation(const SimplePolygon& polygon)
    : Triangulation(polygon, triangulate(polygon)) {}

Triangulation::Triangulation(const SimplePolygon& polygon,
                             std::vector<std::array<std::uint32_t, 3>> tris)
    : polygon_(polygon) {
  const std::size_t n = polygon_.size();
  if (tris.size() != n - 2)
    throw Error(ErrorCode::InvalidInput, "triangle list has the wrong size");
  tris_.reserve(tris.size());
  for (const auto& t : tris) {
    for (auto idx : t)
      if (idx >= n) throw Error(ErrorCode::InvalidInput, "triangle vertex index out of range");
    if (orientation(polygon_.vertex(t[0]), polygon_.vertex(t[1]), polygon_.vertex(t[2])) !=
        Orientation::CCW)
      throw Error(ErrorCode::InvalidInput, "triangle is not counter-clockwise");
    Triangle tri;
    tri.v = t;
    tris_.push_back(tri);
  }
  build_adjacency();
}

void Triangulation::build_adjacency() {
  const auto n = static_cast<std::uint32_t>(polygon_.size());
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> open;
  open.reserve(tris_.size() * 2);
  for (std::uint32_t t = 0; t < tris_.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t a = tris_[t].v[k], b = tris_[t].v[next3(k)];
      if ((a + 1) % n == b) continue;  // polygon edge
      if ((b + 1) % n == a) throw Error(ErrorCode::InvalidInput, "triangle reverses a polygon edge");
      const auto key = edge_key(a, b);
      auto it = open.find(key);
      if (it == open.end()) {
        open.emplace(key, std::make_pair(t, k));
      } else {
        const auto [u, j] = it->second;
        tris_[t].nbr[k] = u;
        tris_[u].nbr[j] = t;
        open.erase(it);
      }
    }
  }
  if (!open.empty()) throw Error(ErrorCode::InvalidInput, "diagonal without a partner triangle");

  // Fans: start at the triangle holding edge (i, i+1) and rotate CCW.
  fans_.assign(n, {});
  for (std::uint32_t t = 0; t < tris_.size(); ++t)
    for (int k = 0; k < 3; ++k)
      if ((tris_[t].v[k] + 1) % n == tris_[t].v[next3(k)] && tris_[t].nbr[k] == kNone)
        fans_[tris_[t].v[k]].push_back(t);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (fans_[i].size() != 1) throw Error(ErrorCode::InvalidInput, "vertex fan is broken");
    std::uint32_t t = fans_[i][0];
    for (std::size_t guard = 0; guard <= tris_.size(); ++guard) {
      const int k = tris_[t].index_of(i);
      const std::uint32_t nxt = tris_[t].nbr[prev3(k)];
      if (nxt == kNone) break;
      fans_[i].push_back(nxt);
      t = nxt;
    }
  }

  parent_.assign(tris_.size(), kNone);
  depth_.assign(tris_.size(), 0);
  std::vector<bool> seen(tris_.size(), false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    for (auto u : tris_[t].nbr) {
      if (u == kNone || seen[u]) continue;
      seen[u] = true;
      parent_[u] = t;
      depth_[u] = depth_[t] + 1;
      queue.push_back(u);
      ++reached;
    }
  }
  if (reached != tris_.size()) throw Error(ErrorCode::InvalidInput, "dual graph is disconnected");
}

std::vector<std::uint32_t> Triangulation::sleeve(std::uint32_t from, std::uint32_t to) const {
  std::vector<std::uint32_t> head, tail;
  while (depth_[from] > depth_[to]) {
    head.push_back(from);
    from = parent_[from];
  }
  while (depth_[to] > depth_[from]) {
    tail.push_back(to);
    to = parent_[to];
  }
  while (from != to) {
    head.push_back(from);
    tail.push_back(to);
    from = parent_[from];
    to = parent_[to];
  }
  head.push_back(from);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

Location Triangulation::locate(Point p) const {
  for (std::uint32_t t = 0; t < tris_.size(); ++t) {
    const auto& tri = tris_[t];
    int s[3];
    bool inside = true;
    for (int k = 0; k < 3; ++k) {
      s[k] = sign_of(orientation(polygon_.vertex(tri.v[k]), polygon_.vertex(tri.v[next3(k)]), p));
      if (s[k] < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    Location loc;
    loc.triangle = t;
    const int zeros = (s[0] == 0) + (s[1] == 0) + (s[2] == 0);
    if (zeros == 0) return loc;
    if (zeros == 1) {
      loc.kind = LocationKind::Edge;
      loc.edge = s[0] == 0 ? 0 : (s[1] == 0 ? 1 : 2);
      loc.on_boundary = tri.nbr[loc.edge] == kNone;
      return loc;
    }
    // Two zero sides meet at the shared vertex.
    loc.kind = LocationKind::Vertex;
    for (int k = 0; k < 3; ++k)
      if (s[k] == 0 && s[prev3(k)] == 0) loc.vertex = tri.v[k];
    loc.on_boundary = true;
    return loc;
  }
  throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
}

namespace {

Point edge_hit_point(Point z1, Point z2, Point a, Point b) {
  const Point d = b - a;
  const Point e = z2 - z1;
  const double den = cross(e, d);
  if (den == 0.0) return z1;
  const double lambda = std::clamp(cross(a - z1, d) / den, 0.0, 1.0);
  return z1 + e * lambda;
}

}  // namespace

RayHit Triangulation::walk_from_triangle(Walk& w, std::uint32_t t, int e) const {
  for (std::size_t guard = 0; guard <= 2 * tris_.size() + 2; ++guard) {
    const auto& tri = tris_[t];
    const Point z0 = polygon_.vertex(tri.v[0]), z1 = polygon_.vertex(tri.v[1]),
                z2 = polygon_.vertex(tri.v[2]);
    if (w.target && orientation(z0, z1, *w.target) != Orientation::CW &&
        orientation(z1, z2, *w.target) != Orientation::CW &&
        orientation(z2, z0, *w.target) != Orientation::CW) {
      RayHit hit;
      hit.point = *w.target;
      hit.triangle = t;
      hit.reached_target = true;
      return hit;
    }
    const std::uint32_t third = tri.v[prev3(e)];
    const int s3 = w.side(polygon_.vertex(third));
    if (s3 == 0) return walk_from_vertex(w, third);
    const int exit = s3 > 0 ? next3(e) : prev3(e);
    const std::uint32_t u = tri.nbr[exit];
    if (u == kNone) {
      RayHit hit;
      hit.edge = tri.v[exit];
      hit.triangle = t;
      hit.point = edge_hit_point(polygon_.vertex(tri.v[exit]), polygon_.vertex(tri.v[next3(exit)]),
                                 w.a, w.b);
      return hit;
    }
    e = tris_[u].index_of(tri.v[next3(exit)]);
    t = u;
  }
  throw Error(ErrorCode::InternalError, "ray walk did not terminate");
}

RayHit Triangulation::walk_from_vertex(Walk& w, std::uint32_t vertex) const {
  for (std::size_t guard = 0; guard <= polygon_.size() + 2; ++guard) {
    const Point wv = polygon_.vertex(vertex);
    RayHit stop;
    stop.point = wv;
    stop.vertex = vertex;
    stop.triangle = fans_[vertex].front();
    if (w.target && wv == *w.target) {
      stop.reached_target = true;
      return stop;
    }
    if (!polygon_.direction_enters(vertex, w.a, w.b)) return stop;

    bool moved = false;
    for (auto t : fans_[vertex]) {
      const auto& tri = tris_[t];
      const int k = tri.index_of(vertex);
      const std::uint32_t i1 = tri.v[next3(k)], i2 = tri.v[prev3(k)];
      const Point z1 = polygon_.vertex(i1), z2 = polygon_.vertex(i2);
      const int c1 = cross_sign(wv, z1, w.a, w.b);
      const int c2 = cross_sign(w.a, w.b, wv, z2);
      if (c1 < 0 || c2 < 0) continue;
      if (c1 == 0 || c2 == 0) {
        // Along a triangle side; hop to its far vertex.
        const std::uint32_t far = c1 == 0 ? i1 : i2;
        const Point fp = polygon_.vertex(far);
        if (w.target && on_segment(wv, fp, *w.target)) {
          stop.point = *w.target;
          stop.vertex = kNone;
          stop.triangle = t;
          stop.reached_target = true;
          return stop;
        }
        vertex = far;
        moved = true;
        break;
      }
      return walk_from_triangle(w, t, k);
    }
    if (!moved) throw Error(ErrorCode::InternalError, "no fan triangle contains the ray direction");
  }
  throw Error(ErrorCode::InternalError, "ray walk did not terminate");
}

RayHit Triangulation::walk(Walk& w, Point start) const {
  const Location loc = locate(start);
  if (w.target && start == *w.target) {
    RayHit hit;
    hit.point = start;
    hit.triangle = loc.triangle;
    hit.reached_target = true;
    return hit;
  }
  const auto& tri = tris_[loc.triangle];
  switch (loc.kind) {
    case LocationKind::Vertex:
      return walk_from_vertex(w, loc.vertex);
    case LocationKind::Edge: {
      const int k = loc.edge;
      const Point za = polygon_.vertex(tri.v[k]), zb = polygon_.vertex(tri.v[next3(k)]);
      const int s = cross_sign(za, zb, w.a, w.b);
      if (s > 0) return walk_from_triangle(w, loc.triangle, k);
      if (s < 0) {
        const std::uint32_t u = tri.nbr[k];
        if (u == kNone) {
          RayHit hit;
          hit.point = start;
          hit.edge = tri.v[k];
          hit.triangle = loc.triangle;
          return hit;
        }
        return walk_from_triangle(w, u, tris_[u].index_of(tri.v[next3(k)]));
      }
      const bool forward = dot_sign(za, zb, w.a, w.b) > 0;
      const std::uint32_t far = forward ? tri.v[next3(k)] : tri.v[k];
      if (w.target && on_segment(start, polygon_.vertex(far), *w.target)) {
        RayHit hit;
        hit.point = *w.target;
        hit.triangle = loc.triangle;
        hit.reached_target = true;
        return hit;
      }
      return walk_from_vertex(w, far);
    }
    case LocationKind::Interior:
      break;
  }
  // Interior start: the ray leaves through a vertex with pattern (-, 0, +)
  // or through an edge whose ends are (-, +).
  int s[3];
  for (int k = 0; k < 3; ++k) s[k] = w.side(polygon_.vertex(tri.v[k]));
  for (int k = 0; k < 3; ++k)
    if (s[k] == 0 && s[prev3(k)] < 0 && s[next3(k)] > 0) {
      if (w.target && on_segment(start, polygon_.vertex(tri.v[k]), *w.target)) {
        RayHit hit;
        hit.point = *w.target;
        hit.triangle = loc.triangle;
        hit.reached_target = true;
        return hit;
      }
      return walk_from_vertex(w, tri.v[k]);
    }
  for (int k = 0; k < 3; ++k)
    if (s[k] < 0 && s[next3(k)] > 0) {
      if (w.target) {
        const Point z0 = polygon_.vertex(tri.v[0]), z1 = polygon_.vertex(tri.v[1]),
                    z2 = polygon_.vertex(tri.v[2]);
        if (orientation(z0, z1, *w.target) != Orientation::CW &&
            orientation(z1, z2, *w.target) != Orientation::CW &&
            orientation(z2, z0, *w.target) != Orientation::CW) {
          RayHit hit;
          hit.point = *w.target;
          hit.triangle = loc.triangle;
          hit.reached_target = true;
          return hit;
        }
      }
      const std::uint32_t u = tri.nbr[k];
      if (u == kNone) {
        RayHit hit;
        hit.edge = tri.v[k];
        hit.triangle = loc.triangle;
        hit.point = edge_hit_point(polygon_.vertex(tri.v[k]), polygon_.vertex(tri.v[next3(k)]), w.a,
                                   w.b);
        return hit;
      }
      return walk_from_triangle(w, u, tris_[u].index_of(tri.v[next3(k)]));
    }
  throw Error(ErrorCode::InternalError, "ray has no exit from its start triangle");
}

Location Triangulation::location_of(const RayHit& hit) const {
  Location loc;
  loc.triangle = hit.triangle;
  if (hit.vertex != kNone) {
    loc.kind = LocationKind::Vertex;
    loc.vertex = hit.vertex;
    loc.on_boundary = true;
  } else if (hit.edge != kNone) {
    const Triangle& t = tris_[hit.triangle];
    loc.kind = LocationKind::Edge;
    loc.edge = t.index_of(hit.edge);
    loc.on_boundary = true;
  }
  return loc;
}

RayHit Triangulation::ray_shoot(Point origin, Point through) const {
  if (origin == through) throw Error(ErrorCode::DegenerateInput, "ray direction is zero");
  Walk w{origin, through, std::nullopt};
  return walk(w, origin);
}

RayHit Triangulation::ray_shoot_from_vertex(std::uint32_t vertex, Point through) const {
  const Point origin = polygon_.vertex(vertex);
  if (origin == through) throw Error(ErrorCode::DegenerateInput, "ray direction is zero");
  Walk w{origin, through, std::nullopt};
  return walk_from_vertex(w, vertex);
}

RayHit Triangulation::extend_through_vertex(Point from, std::uint32_t vertex) const {
  const Point v = polygon_.vertex(vertex);
  if (from == v) throw Error(ErrorCode::DegenerateInput, "ray direction is zero");
  Walk w{from, v, std::nullopt};
  return walk_from_vertex(w, vertex);
}

bool Triangulation::is_visible(Point p, Point q) const {
  locate(q);
  if (p == q) {
    locate(p);
    return true;
  }
  Walk w{p, q, q};
  return walk(w, p).reached_target;
}

Chord Triangulation::maximal_chord(Point anchor, Point dir) const {
  const double len = norm(dir);
  if (!(len > 0.0)) throw Error(ErrorCode::DegenerateInput, "chord direction is zero");
  const double scale = std::max(polygon_.bounds().diagonal(), 1.0) / len;
  const Point through = anchor + dir * scale;
  Walk fwd{anchor, through, std::nullopt};
  Walk bwd{through, anchor, std::nullopt};
  Chord c;
  c.hit_b = walk(fwd, anchor);
  c.hit_a = walk(bwd, anchor);
  c.a = c.hit_a.point;
  c.b = c.hit_b.point;
  return c;
}

Chord Triangulation::maximal_chord_at_vertex(std::uint32_t vertex, Point through) const {
  const Point origin = polygon_.vertex(vertex);
  if (origin == through) throw Error(ErrorCode::DegenerateInput, "chord direction is zero");
  Walk fwd{origin, through, std::nullopt};
  Walk bwd{through, origin, std::nullopt};
  Chord c;
  c.hit_b = walk_from_vertex(fwd, vertex);
  c.hit_a = walk_from_vertex(bwd, vertex);
  c.a = c.hit_a.point;
  c.b = c.hit_b.point;
  return c;
}

}  // namespace pairvis
