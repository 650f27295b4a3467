#include "pairvis/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pairvis/errors.hpp"

namespace pairvis {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Path: return "path";
    case EventKind::Boundary: return "boundary";
    case EventKind::BendT1: return "bend_t1";
    case EventKind::BendT2: return "bend_t2";
  }
  return "unknown";
}

SweepGeometry::SweepGeometry(const Triangulation& tri, Point s, Point t, bool build_trees)
    : tri_(&tri), s_(s), t_(t) {
  loc_s_ = tri.locate(s);
  loc_t_ = tri.locate(t);
  scale_ = std::max(1.0, tri.polygon().bounds().diagonal());
  path_.points = {s, t};
  path_.ids = {kNone, kNone};
  path_.length = distance(s, t);
  visible_ = s == t || tri.is_visible(s, t);
  if (visible_) return;

  path_ = shortest_path(tri, s, loc_s_, t, loc_t_);
  if (path_.size() < 3)
    throw Error(ErrorCode::InternalError, "invisible pair joined by a single segment");

  frames_.resize(path_.size());
  for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
    const Point d_in = normalized(path_.points[i] - path_.points[i - 1]);
    const Point d_out = normalized(path_.points[i + 1] - path_.points[i]);
    Frame& f = frames_[i];
    f.d_in = d_in;
    f.sigma = sign_of(orientation(path_.points[i - 1], path_.points[i], path_.points[i + 1]));
    f.sweep = std::atan2(std::abs(cross(d_in, d_out)), dot(d_in, d_out));
    if (f.sigma == 0 || path_.ids[i] == kNone)
      throw Error(ErrorCode::InternalError, "shortest path has a straight or non-vertex bend");
  }

  if (!build_trees) return;
  spt_s_ = std::make_unique<ShortestPathTree>(tri, s);
  spt_t_ = std::make_unique<ShortestPathTree>(tri, t);
  const std::size_t n = tri.polygon().size();
  children_s_.assign(n, {});
  children_t_.assign(n, {});
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t ps = spt_s_->parent(v), pt = spt_t_->parent(v);
    if (ps < n) children_s_[ps].push_back(v);
    if (pt < n) children_t_[pt].push_back(v);
  }
}

Point SweepGeometry::direction(std::size_t i, double phi) const {
  const Frame& f = frames_[i];
  const double c = std::cos(phi), sn = f.sigma * std::sin(phi);
  return {c * f.d_in.x - sn * f.d_in.y, sn * f.d_in.x + c * f.d_in.y};
}

double SweepGeometry::phi_of(std::size_t i, Point dir) const {
  const Frame& f = frames_[i];
  double phi = std::atan2(f.sigma * cross(f.d_in, dir), dot(f.d_in, dir));
  // Lines are undirected: reduce into a window of width pi centred on the sweep range.
  const double centre = 0.5 * f.sweep;
  while (phi < centre - std::numbers::pi / 2) phi += std::numbers::pi;
  while (phi >= centre + std::numbers::pi / 2) phi -= std::numbers::pi;
  return phi;
}

LineOfSight SweepGeometry::finish(std::size_t i, Chord c, Point through, double phi) const {
  LineOfSight l;
  l.chord = std::move(c);
  l.pivot_index = i;
  l.pivot = path_.points[i];
  l.through = through;
  l.phi = phi;
  const Point d = direction(i, phi);
  double theta = std::atan2(d.y, d.x);
  if (theta < 0.0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  l.theta = theta;
  return l;
}

LineOfSight SweepGeometry::line(std::size_t i, double phi) const {
  const Point through = path_.points[i] + direction(i, phi) * scale_;
  return finish(i, tri_->maximal_chord_at_vertex(path_.ids[i], through), through, phi);
}

LineOfSight SweepGeometry::line_through(std::size_t i, Point through, int sense) const {
  Chord c = tri_->maximal_chord_at_vertex(path_.ids[i], through);
  if (sense < 0) {
    std::swap(c.a, c.b);
    std::swap(c.hit_a, c.hit_b);
  }
  const Point d = (through - path_.points[i]) * static_cast<double>(sense);
  return finish(i, std::move(c), through, phi_of(i, d));
}

GeodesicPath SweepGeometry::path_from(bool from_s, const RayHit& hit) const {
  const Location loc = tri_->location_of(hit);
  if (spt_s_) return (from_s ? *spt_s_ : *spt_t_).path_to(hit.point, loc);
  return from_s ? shortest_path(*tri_, s_, loc_s_, hit.point, loc)
                : shortest_path(*tri_, t_, loc_t_, hit.point, loc);
}

GeodesicPath SweepGeometry::path_to_pivot(bool from_s, std::size_t i) const {
  GeodesicPath p;
  if (from_s) {
    p.points.assign(path_.points.begin(), path_.points.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    p.ids.assign(path_.ids.begin(), path_.ids.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  } else {
    p.points.assign(path_.points.rbegin(), path_.points.rend() - static_cast<std::ptrdiff_t>(i));
    p.ids.assign(path_.ids.rbegin(), path_.ids.rend() - static_cast<std::ptrdiff_t>(i));
  }
  for (std::size_t k = 1; k < p.size(); ++k) p.length += distance(p.points[k - 1], p.points[k]);
  return p;
}

LineOfSight SweepGeometry::edge_line(std::size_t i, bool outgoing) const {
  LineOfSight l = outgoing ? line_through(i, path_.points[i + 1], +1)
                           : line_through(i, path_.points[i - 1], -1);
  l.phi = outgoing ? frames_[i].sweep : 0.0;
  return l;
}

SegmentDistance SweepGeometry::distance_from(const LineOfSight& l, bool from_s) const {
  SegmentDistance sd =
      distance_to_segment(path_from(from_s, l.chord.hit_a), path_from(from_s, l.chord.hit_b));
  // The pivot lies on every chord of the sweep, so its geodesic is always a
  // candidate even when the rounded chord ends leave it a hair off the segment.
  GeodesicPath to_pivot = path_to_pivot(from_s, l.pivot_index);
  if (to_pivot.length < sd.distance) {
    sd.distance = to_pivot.length;
    sd.closest = l.pivot;
    sd.path = std::move(to_pivot);
    const std::size_t k = sd.path.size();
    sd.anchor = sd.path.points[k >= 2 ? k - 2 : 0];
    sd.anchor_id = sd.path.ids[k >= 2 ? k - 2 : 0];
  }
  return sd;
}

namespace {

Segment edge_of(const SimplePolygon& poly, const RayHit& hit) {
  if (hit.edge != kNone) return poly.edge(hit.edge);
  return {hit.point, hit.point};
}

}  // namespace

LegStructure SweepGeometry::structure(const LineOfSight& l, bool from_s) const {
  const SegmentDistance sd = from_s ? distance_s(l) : distance_t(l);
  LegStructure out;
  if (sd.path.ids.back() != kNone || sd.path.size() == 1) {
    // The geodesic ends at a vertex lying on the chord.
    out.anchor = sd.closest;
    out.prefix = sd.distance;
    return out;
  }
  out.anchor = sd.anchor;
  out.prefix = std::max(0.0, sd.distance - distance(sd.anchor, sd.closest));
  if (sd.closest == l.chord.a) {
    out.leg = LegCase::EndMinus;
    out.edge = edge_of(tri_->polygon(), l.chord.hit_a);
  } else if (sd.closest == l.chord.b) {
    out.leg = LegCase::EndPlus;
    out.edge = edge_of(tri_->polygon(), l.chord.hit_b);
  }
  return out;
}

namespace {

SweepEvent make_event(EventKind kind, const LineOfSight& l, int side, double sweep) {
  SweepEvent e;
  e.kind = kind;
  e.flags = event_flag(kind);
  e.line = l;
  e.x = l.chord.b;
  e.x_tilde = l.chord.a;
  e.pivot_index = l.pivot_index;
  e.side = side;
  e.sort_key = static_cast<double>(l.pivot_index) + (sweep > 0.0 ? l.phi / sweep : 0.0);
  return e;
}

// Folds `b` into `a`; the lower kind wins.
void merge_into(SweepEvent& a, const SweepEvent& b) {
  a.flags |= b.flags;
  if (b.kind < a.kind) {
    a.kind = b.kind;
    a.line = b.line;
    a.x = b.x;
    a.x_tilde = b.x_tilde;
  }
  if (a.side != b.side) a.side = 0;
  a.vertices.insert(a.vertices.end(), b.vertices.begin(), b.vertices.end());
}

}  // namespace

EventSequence compute_path_and_boundary_events(const SweepGeometry& g) {
  if (g.visible()) throw Error(ErrorCode::DegenerateInput, "s and t see each other");
  const GeodesicPath& path = g.path();
  const SimplePolygon& poly = g.triangulation().polygon();
  EventSequence seq;

  for (std::size_t i = g.first_pivot(); i <= g.last_pivot(); ++i) {
    const Point prev = path.points[i - 1], v = path.points[i], next = path.points[i + 1];
    const int sigma = g.turn(i);
    const double sweep = g.sweep_angle(i);

    if (i == g.first_pivot()) {
      const LineOfSight l = g.edge_line(i, false);
      SweepEvent e = make_event(EventKind::Path, l, 0, sweep);
      if (path.ids[i - 1] != kNone) e.vertices.push_back(path.ids[i - 1]);
      e.vertices.push_back(path.ids[i]);
      seq.events.push_back(std::move(e));
    }

    // Vertices whose chord through the pivot lies strictly inside the rotation range.
    std::vector<SweepEvent> boundary;
    auto consider = [&](std::uint32_t w, int side) {
      const Point p = poly.vertex(w);
      const int o_in = sigma * sign_of(orientation(prev, v, p)) * side;
      const int o_out = sigma * sign_of(orientation(v, next, p)) * side;
      if (o_in <= 0 || o_out >= 0) return;
      SweepEvent e = make_event(EventKind::Boundary, g.line_through(i, p, side), side, sweep);
      e.vertices.push_back(w);
      boundary.push_back(std::move(e));
    };
    for (std::uint32_t w : g.children_s(path.ids[i])) consider(w, +1);
    for (std::uint32_t w : g.children_t(path.ids[i])) consider(w, -1);
    std::sort(boundary.begin(), boundary.end(),
              [](const SweepEvent& a, const SweepEvent& b) { return a.line.phi < b.line.phi; });
    std::vector<SweepEvent> merged;
    for (SweepEvent& e : boundary) {
      // Vertices on one line through the pivot form a single event.
      if (!merged.empty() &&
          orientation(v, merged.back().line.through, e.line.through) == Orientation::Collinear) {
        merge_into(merged.back(), e);
        continue;
      }
      merged.push_back(std::move(e));
    }
    for (SweepEvent& e : merged) seq.events.push_back(std::move(e));

    const LineOfSight l = g.edge_line(i, true);
    SweepEvent e = make_event(EventKind::Path, l, 0, sweep);
    e.vertices.push_back(path.ids[i]);
    if (path.ids[i + 1] != kNone) e.vertices.push_back(path.ids[i + 1]);
    seq.events.push_back(std::move(e));
  }
  return seq;
}

namespace {

// Rotation angles at which the leg structure of one side can change inside
// (lo, hi). Anchors always come from the funnel spanned by the paths to the
// chord ends at both interval ends and to the pivot, so the candidates are
// closed-form angles built from those vertices and the two end edges.
class BendCandidates {
 public:
  BendCandidates(const SweepGeometry& g, std::size_t i, double lo, double hi)
      : g_(g), i_(i), v_(g.path().points[i]), lo_(lo), hi_(hi) {}

  void add_side(bool from_s, const LineOfSight& l_lo, const LineOfSight& l_hi,
                const Segment* edge_a, const Segment* edge_b) {
    std::vector<GeodesicPath> paths;
    for (const LineOfSight* l : {&l_lo, &l_hi}) {
      paths.push_back(g_.path_from(from_s, l->chord.hit_a));
      paths.push_back(g_.path_from(from_s, l->chord.hit_b));
    }
    paths.push_back(g_.path_to_pivot(from_s, i_));

    std::size_t c = 0;
    for (;; ++c) {
      bool same = true;
      for (const GeodesicPath& p : paths)
        same = same && c + 1 < p.size() && p.points[c + 1] == paths[0].points[c + 1];
      if (!same) break;
    }
    const Segment* edges[2] = {edge_a, edge_b};
    for (const GeodesicPath& p : paths) {
      for (std::size_t k = c; k < p.size(); ++k) {
        const Point w = p.points[k];
        for (const Segment* e : edges)
          if (e) add_thales(w, *e);
        if (k + 1 == p.size()) continue;
        const Point w2 = p.points[k + 1];
        if (w2 == w) continue;
        add(perp(w2 - w));
        for (const Segment* e : edges)
          if (e)
            if (auto x = line_intersection(w, w2 - w, e->a, e->b - e->a)) add(*x - v_);
      }
    }
  }

  // Candidates closer than kCoincide are one event: the same vertex reached
  // through two different closed forms.
  std::vector<double> breakpoints() {
    constexpr double kCoincide = 1e-9;
    std::sort(out_.begin(), out_.end());
    std::vector<double> b{lo_};
    for (double phi : out_)
      if (phi - b.back() > kCoincide && hi_ - phi > kCoincide) b.push_back(phi);
    b.push_back(hi_);
    return b;
  }

 private:
  void add(Point dir) {
    if (!is_finite(dir) || (dir.x == 0.0 && dir.y == 0.0)) return;
    const double phi = g_.phi_of(i_, dir);
    if (phi > lo_ && phi < hi_) out_.push_back(phi);
  }

  // The foot of w on the chord reaches the edge line where the circle with
  // diameter (w, pivot) crosses it.
  void add_thales(Point w, const Segment& e) {
    const Point c = (w + v_) * 0.5;
    const double r2 = 0.25 * dot(w - v_, w - v_);
    const Point d = e.b - e.a, f = e.a - c;
    const double qa = dot(d, d), qb = 2.0 * dot(d, f), qc = dot(f, f) - r2;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (qa == 0.0 || disc < 0.0) return;
    const double root = std::sqrt(disc);
    for (double sgn : {-1.0, 1.0}) {
      const Point x = e.a + d * ((-qb + sgn * root) / (2.0 * qa));
      if (distance(x, v_) > 1e-12 * (1.0 + norm(v_))) add(x - v_);
    }
  }

  const SweepGeometry& g_;
  std::size_t i_;
  Point v_;
  double lo_, hi_;
  std::vector<double> out_;
};

const Segment* end_edge(const SimplePolygon& poly, const RayHit& hit, Segment& store) {
  if (hit.edge == kNone) return nullptr;
  store = poly.edge(hit.edge);
  return &store;
}

EventKind bend_kind(const LegStructure& before, const LegStructure& after) {
  return after.prefix < before.prefix ? EventKind::BendT2 : EventKind::BendT1;
}

}  // namespace

std::vector<double> structure_breakpoints(const SweepGeometry& g, std::size_t i,
                                          const LineOfSight& lo, const LineOfSight& hi) {
  if (!(hi.phi > lo.phi)) return {lo.phi, hi.phi};
  const SimplePolygon& poly = g.triangulation().polygon();
  const LineOfSight mid = g.line(i, 0.5 * (lo.phi + hi.phi));
  Segment sa, sb;
  const Segment* ea = end_edge(poly, mid.chord.hit_a, sa);
  const Segment* eb = end_edge(poly, mid.chord.hit_b, sb);
  BendCandidates cand(g, i, lo.phi, hi.phi);
  cand.add_side(true, lo, hi, ea, eb);
  cand.add_side(false, lo, hi, ea, eb);
  return cand.breakpoints();
}

SweepPiece classify_piece(const SweepGeometry& g, std::size_t i, double phi_lo, double phi_hi) {
  const LineOfSight l = g.line(i, 0.5 * (phi_lo + phi_hi));
  return {phi_lo, phi_hi, g.structure(l, true), g.structure(l, false)};
}

EventSequence compute_bend_events(const SweepGeometry& g, const EventSequence& partial,
                                  std::vector<SweepInterval>* intervals) {
  EventSequence out;
  if (intervals) intervals->clear();

  for (std::size_t j = 0; j < partial.events.size(); ++j) {
    out.events.push_back(partial.events[j]);
    if (j + 1 == partial.events.size()) break;
    const SweepEvent& e0 = partial.events[j];
    const SweepEvent& e1 = partial.events[j + 1];

    SweepInterval iv;
    iv.pivot_index = e1.pivot_index;
    iv.first_event = out.events.size() - 1;
    const std::size_t i = iv.pivot_index;
    const bool same_pivot = e0.pivot_index == i;
    const LineOfSight l_lo = same_pivot ? e0.line : g.edge_line(i, false);
    const LineOfSight& l_hi = e1.line;
    iv.phi_lo = l_lo.phi;
    iv.phi_hi = l_hi.phi;

    if (iv.phi_hi > iv.phi_lo) {
      const std::vector<double> b = structure_breakpoints(g, i, l_lo, l_hi);
      for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        SweepPiece piece = classify_piece(g, i, b[k], b[k + 1]);
        if (!iv.pieces.empty() && iv.pieces.back().s == piece.s && iv.pieces.back().t == piece.t) {
          iv.pieces.back().phi_hi = piece.phi_hi;
          continue;
        }
        iv.pieces.push_back(std::move(piece));
      }

      const double sweep = g.sweep_angle(i);
      for (std::size_t k = 1; k < iv.pieces.size(); ++k) {
        const SweepPiece& a = iv.pieces[k - 1];
        const SweepPiece& c = iv.pieces[k];
        const LineOfSight l = g.line(i, c.phi_lo);
        SweepEvent ev;
        bool first = true;
        auto add = [&](const LegStructure& x, const LegStructure& y, int side) {
          if (x == y) return;
          SweepEvent one = make_event(bend_kind(x, y), l, side, sweep);
          if (first) ev = std::move(one);
          else merge_into(ev, one);
          first = false;
        };
        add(a.s, c.s, -1);
        add(a.t, c.t, +1);
        if (!first) out.events.push_back(std::move(ev));
      }
    }
    if (intervals) intervals->push_back(std::move(iv));
  }
  return out;
}

}  // namespace pairvis
