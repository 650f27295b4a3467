#include "pairvis/geodesics.hpp"

#include <algorithm>
#include <cmath>

#include "funnel.hpp"
#include "pairvis/errors.hpp"

namespace pairvis {
namespace {

using detail::Funnel;
using detail::FunnelNode;

int next3(int k) { return k == 2 ? 0 : k + 1; }
int prev3(int k) { return k == 0 ? 2 : k - 1; }

double polyline_length(const std::vector<Point>& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
  return len;
}

std::uint32_t vertex_at(const Location& loc) {
  return loc.kind == LocationKind::Vertex ? loc.vertex : kNone;
}

// Initial funnel across the diagonal (a, b) seen from an apex inside the
// previous triangle. The apex may coincide with a or b.
void seed_funnel(Funnel& f, FunnelNode a, FunnelNode apex, FunnelNode b) {
  if (apex.p == a.p) {
    f.reset({a, b}, 0);
  } else if (apex.p == b.p) {
    f.reset({a, b}, 1);
  } else {
    f.reset({a, apex, b}, 1);
  }
}

}  // namespace

GeodesicPath shortest_path(const Triangulation& tri, Point p, Point q) {
  return shortest_path(tri, p, tri.locate(p), q, tri.locate(q));
}

GeodesicPath shortest_path(const Triangulation& tri, Point p, const Location& lp, Point q,
                           const Location& lq) {
  GeodesicPath path;
  const std::uint32_t pid = vertex_at(lp), qid = vertex_at(lq);
  if (p == q) {
    path.points = {p};
    path.ids = {pid};
    return path;
  }
  if (lp.triangle == lq.triangle) {
    path.points = {p, q};
    path.ids = {pid, qid};
    path.length = distance(p, q);
    return path;
  }

  const auto sleeve = tri.sleeve(lp.triangle, lq.triangle);
  const SimplePolygon& poly = tri.polygon();

  // Node pool with parent links; funnel keys index into it.
  struct PoolNode {
    Point p;
    std::uint32_t id;
    std::uint32_t parent;
  };
  std::vector<PoolNode> pool{{p, pid, kNone}};
  auto add = [&](Point pt, std::uint32_t id, std::uint32_t parent) {
    pool.push_back({pt, id, parent});
    return static_cast<std::uint32_t>(pool.size() - 1);
  };

  Funnel funnel(sleeve.size() + 2);
  auto entry_of = [&](std::uint32_t from, std::uint32_t to) {
    const Triangle& u = tri.triangle(to);
    for (int k = 0; k < 3; ++k)
      if (u.nbr[k] == from) return k;
    throw Error(ErrorCode::InternalError, "sleeve triangles are not adjacent");
  };

  int e = entry_of(sleeve[0], sleeve[1]);
  {
    const Triangle& u = tri.triangle(sleeve[1]);
    const std::uint32_t ia = u.v[e], ib = u.v[next3(e)];
    const FunnelNode a{poly.vertex(ia), add(poly.vertex(ia), ia, 0)};
    const FunnelNode b{poly.vertex(ib), add(poly.vertex(ib), ib, 0)};
    // When p is a or b itself the pool entry for it is the source node.
    FunnelNode fa = a, fb = b;
    if (a.p == p) fa.key = 0;
    if (b.p == p) fb.key = 0;
    seed_funnel(funnel, fa, FunnelNode{p, 0}, fb);
  }

  std::uint32_t q_key = kNone;
  for (std::size_t i = 1; i < sleeve.size(); ++i) {
    const Triangle& u = tri.triangle(sleeve[i]);
    if (i + 1 == sleeve.size()) {
      const std::size_t j = funnel.attach(q);
      q_key = add(q, qid, funnel.at(j).key);
      break;
    }
    const std::uint32_t ic = u.v[prev3(e)];
    const Point c = poly.vertex(ic);
    const std::size_t j = funnel.attach(c);
    const FunnelNode cn{c, add(c, ic, funnel.at(j).key)};
    const std::uint32_t nxt = sleeve[i + 1];
    if (u.nbr[next3(e)] == nxt) {
      funnel.keep_right(j, cn);
    } else {
      funnel.keep_left(j, cn);
    }
    e = entry_of(sleeve[i], nxt);
  }

  std::vector<std::uint32_t> chain;
  for (std::uint32_t k = q_key; k != kNone; k = pool[k].parent) {
    chain.push_back(k);
    if (k == 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  for (auto k : chain) {
    // q may coincide with its parent vertex (q is a polygon vertex).
    if (!path.points.empty() && path.points.back() == pool[k].p) continue;
    path.points.push_back(pool[k].p);
    path.ids.push_back(pool[k].id);
  }
  path.length = polyline_length(path.points);
  return path;
}

ShortestPathTree::ShortestPathTree(const Triangulation& tri, Point root) : tri_(&tri), root_(root) {
  const Location loc = tri.locate(root);
  const SimplePolygon& poly = tri.polygon();
  const std::size_t n = poly.size();
  root_vertex_ = vertex_at(loc);
  root_tri_ = loc.triangle;
  parent_.assign(n, kNone);
  dist_.assign(n, 0.0);
  depth_.assign(n, 0);
  entry_.assign(tri.size(), -1);

  const std::uint32_t root_node = node_id(kRoot);
  const Triangle& t0 = tri.triangle(root_tri_);
  for (auto z : t0.v) {
    if (z == root_vertex_) {
      parent_[z] = kRoot;
      continue;
    }
    parent_[z] = root_node;
    dist_[z] = pairvis::distance(root_, poly.vertex(z));
    depth_[z] = root_vertex_ == kNone ? 1 : 2;
  }
  if (root_vertex_ != kNone) depth_[root_vertex_] = 1;

  struct Frame {
    std::uint32_t t;
    int e;
    int phase;
    std::size_t j;
    bool pushed;
    Funnel::Undo undo;
  };
  Funnel funnel(tri.size() + 2);
  std::vector<Frame> stack;

  auto node = [&](std::uint32_t v) { return FunnelNode{poly.vertex(v), v}; };
  auto process_from = [&](std::uint32_t u, std::uint32_t across_a) {
    // Child triangle u entered across an edge whose a-end (in u) is across_a.
    stack.push_back({u, tri.triangle(u).index_of(across_a), 0, 0, false, {}});
  };

  for (int k = 0; k < 3; ++k) {
    const std::uint32_t u = t0.nbr[k];
    if (u == kNone) continue;
    const std::uint32_t ia = t0.v[next3(k)], ib = t0.v[k];
    seed_funnel(funnel, node(ia), FunnelNode{root_, root_node}, node(ib));
    process_from(u, ia);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const Triangle& tr = tri.triangle(f.t);
      const std::uint32_t ic = tr.v[prev3(f.e)];
      if (f.pushed) {
        funnel.undo(f.undo);
        f.pushed = false;
      }
      if (f.phase == 0) {
        entry_[f.t] = f.e;
        f.j = funnel.attach(poly.vertex(ic));
        const std::uint32_t par = funnel.at(f.j).key;
        parent_[ic] = par;
        dist_[ic] = distance_of(par) + pairvis::distance(point_of(par), poly.vertex(ic));
        depth_[ic] = (par == kRoot ? 0 : depth_[par]) + 1;
        f.phase = 1;
        const std::uint32_t w = tr.nbr[next3(f.e)];
        if (w != kNone) {
          f.undo = funnel.keep_right(f.j, node(ic));
          f.pushed = true;
          process_from(w, ic);
        }
        continue;
      }
      if (f.phase == 1) {
        f.phase = 2;
        const std::uint32_t w = tr.nbr[prev3(f.e)];
        if (w != kNone) {
          f.undo = funnel.keep_left(f.j, node(ic));
          f.pushed = true;
          process_from(w, tr.v[f.e]);
        }
        continue;
      }
      stack.pop_back();
    }
  }
}

std::uint32_t ShortestPathTree::node_id(std::uint32_t node) const {
  return node == kRoot && root_vertex_ != kNone ? root_vertex_ : node;
}

Point ShortestPathTree::point_of(std::uint32_t node) const {
  return node == kRoot ? root_ : tri_->polygon().vertex(node);
}

double ShortestPathTree::distance_of(std::uint32_t node) const {
  return node == kRoot ? 0.0 : dist_[node];
}

std::uint32_t ShortestPathTree::predecessor(Point p) const { return predecessor(p, tri_->locate(p)); }

std::uint32_t ShortestPathTree::predecessor(Point p, const Location& loc) const {
  if (p == root_) return kRoot;
  if (loc.kind == LocationKind::Vertex) return parent_[loc.vertex] == kRoot ? kRoot : parent_[loc.vertex];
  const int e = entry_[loc.triangle];
  if (e < 0) return kRoot;
  const Triangle& tr = tri_->triangle(loc.triangle);
  const std::uint32_t a = tr.v[e], b = tr.v[next3(e)];

  auto up = [&](std::uint32_t v) { return v == kRoot ? kRoot : parent_[v]; };
  auto dep = [&](std::uint32_t v) { return v == kRoot ? 0u : depth_[v]; };
  std::uint32_t x = a, y = b;
  while (dep(x) > dep(y)) x = up(x);
  while (dep(y) > dep(x)) y = up(y);
  while (x != y) {
    x = up(x);
    y = up(y);
  }
  const std::uint32_t apex = x;

  auto canonical = [&](std::uint32_t v) { return v == root_vertex_ ? kRoot : v; };
  for (std::uint32_t w = a; w != apex; w = up(w))
    if (orientation(point_of(up(w)), point_of(w), p) == Orientation::CCW) return canonical(w);
  for (std::uint32_t w = b; w != apex; w = up(w))
    if (orientation(point_of(up(w)), point_of(w), p) == Orientation::CW) return canonical(w);
  return canonical(apex);
}

double ShortestPathTree::distance_to(Point p) const { return distance_to(p, tri_->locate(p)); }

double ShortestPathTree::distance_to(Point p, const Location& loc) const {
  const std::uint32_t pred = predecessor(p, loc);
  return distance_of(pred) + pairvis::distance(point_of(pred), p);
}

GeodesicPath ShortestPathTree::path_from_node(std::uint32_t node, Point tail, bool add_tail) const {
  GeodesicPath path;
  std::vector<std::uint32_t> chain;
  for (std::uint32_t v = node; v != kRoot; v = parent_[v]) chain.push_back(v);
  path.points.push_back(root_);
  path.ids.push_back(root_vertex_);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Point pt = tri_->polygon().vertex(*it);
    if (pt == path.points.back()) continue;
    path.points.push_back(pt);
    path.ids.push_back(*it);
  }
  if (add_tail && tail != path.points.back()) {
    path.points.push_back(tail);
    path.ids.push_back(kNone);
  }
  path.length = polyline_length(path.points);
  return path;
}

GeodesicPath ShortestPathTree::path_to(Point p) const { return path_to(p, tri_->locate(p)); }

GeodesicPath ShortestPathTree::path_to(Point p, const Location& loc) const {
  if (loc.kind == LocationKind::Vertex) return path_to_vertex(loc.vertex);
  return path_from_node(predecessor(p, loc), p, true);
}

GeodesicPath ShortestPathTree::path_to_vertex(std::uint32_t v) const {
  return path_from_node(v, {}, false);
}

namespace {

// Keeps the part of a convex polygon where sgn * orient(p, q, x) >= 0.
std::vector<Point> clip(const std::vector<Point>& poly, Point p, Point q, int sgn) {
  std::vector<Point> out;
  if (poly.empty()) return out;
  const Point d = q - p;
  auto val = [&](Point x) { return sgn * cross(d, x - p); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point cur = poly[i], nxt = poly[(i + 1) % poly.size()];
    const double vc = val(cur), vn = val(nxt);
    if (vc >= 0.0) out.push_back(cur);
    if ((vc > 0.0 && vn < 0.0) || (vc < 0.0 && vn > 0.0)) out.push_back(cur + (nxt - cur) * (vc / (vc - vn)));
  }
  return out;
}

double polygon_area(const std::vector<Point>& poly) {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * a;
}

}  // namespace

ShortestPathMap::ShortestPathMap(const ShortestPathTree& spt) : spt_(&spt) {
  const Triangulation& tri = spt.triangulation();
  const SimplePolygon& poly = tri.polygon();
  constexpr std::uint32_t kRoot = ShortestPathTree::kRoot;
  auto up = [&](std::uint32_t v) { return v == kRoot ? kRoot : spt.parent(v); };

  for (std::uint32_t t = 0; t < tri.size(); ++t) {
    const Triangle& tr = tri.triangle(t);
    const std::vector<Point> tri_poly{poly.vertex(tr.v[0]), poly.vertex(tr.v[1]), poly.vertex(tr.v[2])};
    const int e = spt.entry_edge(t);
    if (e < 0) {
      cells_.push_back({tri_poly, t, kRoot});
      continue;
    }
    // Funnel of the entry edge as tree nodes: a .. apex .. b.
    std::vector<std::uint32_t> a_side, b_side;
    for (std::uint32_t v = tr.v[e]; v != kRoot; v = up(v)) a_side.push_back(v);
    a_side.push_back(kRoot);
    for (std::uint32_t v = tr.v[next3(e)]; v != kRoot; v = up(v)) b_side.push_back(v);
    b_side.push_back(kRoot);
    while (a_side.size() > 1 && b_side.size() > 1 && a_side[a_side.size() - 2] == b_side[b_side.size() - 2]) {
      a_side.pop_back();
      b_side.pop_back();
    }
    std::vector<std::uint32_t> w(a_side.begin(), a_side.end());
    const std::size_t m = w.size() - 1;
    for (auto it = b_side.rbegin() + 1; it != b_side.rend(); ++it) w.push_back(*it);
    auto pt = [&](std::size_t j) { return spt.point_of(w[j]); };

    for (std::size_t j = 0; j < w.size(); ++j) {
      std::vector<Point> cell = tri_poly;
      if (j < m) {
        cell = clip(cell, pt(j + 1), pt(j), 1);
        if (j > 0) cell = clip(cell, pt(j), pt(j - 1), -1);
      } else if (j == m) {
        if (m > 0) cell = clip(cell, pt(m), pt(m - 1), -1);
        if (m + 1 < w.size()) cell = clip(cell, pt(m), pt(m + 1), 1);
      } else {
        cell = clip(cell, pt(j - 1), pt(j), -1);
        if (j + 1 < w.size()) cell = clip(cell, pt(j), pt(j + 1), 1);
      }
      if (cell.size() >= 3 && polygon_area(cell) > 1e-14 * poly.area()) {
        const std::uint32_t pred = w[j] == spt.root_vertex() ? kRoot : w[j];
        cells_.push_back({std::move(cell), t, pred});
      }
    }
  }

  for (std::uint32_t v = 0; v < poly.size(); ++v) {
    const std::uint32_t par = spt.parent(v);
    if (v == spt.root_vertex() || spt.point_of(par) == poly.vertex(v)) continue;
    RayHit hit = tri.extend_through_vertex(spt.point_of(par), v);
    if (hit.point == poly.vertex(v)) continue;
    extensions_.push_back({v, par == spt.root_vertex() ? kRoot : par, hit});
  }
}

namespace {

// Assumes the funnel apex lies on or right of a -> b.
SegmentDistance segment_distance_oriented(const GeodesicPath& to_a, const GeodesicPath& to_b,
                                          std::size_t c0) {
  const Point a = to_a.back(), b = to_b.back();
  std::vector<double> prefix(to_a.size(), 0.0);
  for (std::size_t i = 1; i < to_a.size(); ++i)
    prefix[i] = prefix[i - 1] + distance(to_a.points[i - 1], to_a.points[i]);

  // W = a .. apex .. b with geodesic distance d from the source.
  struct WNode {
    Point p;
    double d;
    std::size_t src;  // index in its originating path
    bool from_a;
  };
  std::vector<WNode> w;
  for (std::size_t i = to_a.size(); i-- > c0;) w.push_back({to_a.points[i], prefix[i], i, true});
  const std::size_t m = w.size() - 1;
  double db = prefix[c0];
  for (std::size_t i = c0 + 1; i < to_b.size(); ++i) {
    db += distance(to_b.points[i - 1], to_b.points[i]);
    w.push_back({to_b.points[i], db, i, false});
  }

  double best = w.front().d;
  std::size_t best_j = 0;
  Point best_q = a;
  if (w.back().d < best) {
    best = w.back().d;
    best_j = w.size() - 1;
    best_q = b;
  }
  const Point seg_d = b - a;
  const double seg_len2 = dot(seg_d, seg_d);
  for (std::size_t j = 1; seg_len2 > 0.0 && j + 1 < w.size(); ++j) {
    const double lambda = dot(w[j].p - a, seg_d) / seg_len2;
    if (lambda < 0.0 || lambda > 1.0) continue;
    const Point foot = a + seg_d * lambda;
    const Point n = foot - w[j].p;
    // Wedge of directions leaving w[j] toward the segment, from its a-side
    // bound clockwise to its b-side bound.
    Point ra, rb;
    if (j == m) {
      ra = w[j - 1].p - w[j].p;
      rb = w[j + 1].p - w[j].p;
    } else if (j < m) {
      ra = w[j - 1].p - w[j].p;
      rb = w[j].p - w[j + 1].p;
    } else {
      ra = w[j].p - w[j - 1].p;
      rb = w[j + 1].p - w[j].p;
    }
    // A vertex touching the segment has a zero normal up to rounding; its
    // direction is noise, so skip the wedge test.
    const bool touches = dot(n, n) <= 1e-24 * seg_len2;
    // At a bend event n runs parallel to a funnel edge; rounding must not
    // push it out of both neighbouring wedges.
    const double slack = 1e-10 * norm(n);
    const bool inside =
        touches || (cross(ra, n) <= slack * norm(ra) && cross(n, rb) <= slack * norm(rb));
    if (!inside) continue;
    const double cand = w[j].d + norm(n);
    if (cand < best) {
      best = cand;
      best_j = j;
      best_q = foot;
    }
  }

  SegmentDistance out;
  out.distance = best;
  out.closest = best_q;
  const WNode& anchor = w[best_j];
  const GeodesicPath& src = anchor.from_a ? to_a : to_b;
  const auto stop = static_cast<std::ptrdiff_t>(anchor.src + 1);
  out.path.points.assign(src.points.begin(), src.points.begin() + stop);
  out.path.ids.assign(src.ids.begin(), src.ids.begin() + stop);
  if (best_q != anchor.p) {
    out.path.points.push_back(best_q);
    out.path.ids.push_back(kNone);
  }
  out.path.length = best;
  const std::size_t k = out.path.size();
  out.anchor = out.path.points[k >= 2 ? k - 2 : 0];
  out.anchor_id = out.path.ids[k >= 2 ? k - 2 : 0];
  return out;
}

}  // namespace

SegmentDistance distance_to_segment(const GeodesicPath& to_a, const GeodesicPath& to_b) {
  std::size_t c0 = 0;
  while (c0 + 1 < to_a.size() && c0 + 1 < to_b.size() && to_a.points[c0 + 1] == to_b.points[c0 + 1]) ++c0;
  if (orientation(to_a.back(), to_b.back(), to_a.points[c0]) == Orientation::CCW)
    return segment_distance_oriented(to_b, to_a, c0);
  return segment_distance_oriented(to_a, to_b, c0);
}

SegmentDistance distance_to_segment(const Triangulation& tri, Point p, const Segment& seg) {
  return distance_to_segment(shortest_path(tri, p, seg.a), shortest_path(tri, p, seg.b));
}

SegmentDistance distance_to_segment(const ShortestPathTree& spt, const Segment& seg) {
  return distance_to_segment(spt.path_to(seg.a), spt.path_to(seg.b));
}

SegmentDistance distance_to_segment(const Triangulation& tri, Point p, const Chord& chord) {
  const Location lp = tri.locate(p);
  return distance_to_segment(shortest_path(tri, p, lp, chord.a, tri.location_of(chord.hit_a)),
                             shortest_path(tri, p, lp, chord.b, tri.location_of(chord.hit_b)));
}

SegmentDistance distance_to_segment(const ShortestPathTree& spt, const Chord& chord) {
  const Triangulation& tri = spt.triangulation();
  return distance_to_segment(spt.path_to(chord.a, tri.location_of(chord.hit_a)),
                             spt.path_to(chord.b, tri.location_of(chord.hit_b)));
}

}  // namespace pairvis
