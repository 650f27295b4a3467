#include "pairvis/solver.hpp"

#include <cmath>

namespace pairvis {

namespace {

constexpr double kEndSnap = 1e-12;

double theta_in(const SweepGeometry& g, std::size_t pivot) {
  const Point d = g.direction(pivot, 0.0);
  return std::atan2(d.y, d.x);
}

class Best {
 public:
  Best(const SweepGeometry& g, const Objective& obj) : g_(g), obj_(obj) {}

  void offer(const LineOfSight& l, std::size_t interval_id) {
    const SegmentDistance sd_s = g_.distance_s(l), sd_t = g_.distance_t(l);
    const double val = obj_.combine(sd_s.distance, sd_t.distance);
    if (have_ && !(val < r_.value - 1e-12 * (1.0 + std::abs(r_.value)))) return;
    have_ = true;
    r_.value = val;
    r_.ds = sd_s.distance;
    r_.dt = sd_t.distance;
    r_.s_star = sd_s.closest;
    r_.t_star = sd_t.closest;
    r_.chord = l.chord;
    r_.pivot = l.pivot;
    r_.pivot_index = l.pivot_index;
    r_.through = l.through;
    r_.theta = l.theta;
    r_.path_s = sd_s.path;
    r_.path_t = sd_t.path;
    r_.interval_id = interval_id;
  }

  SolveResult result() const { return r_; }

 private:
  const SweepGeometry& g_;
  const Objective& obj_;
  SolveResult r_;
  bool have_ = false;
};

SolveResult visible_result(Point s, Point t, const Objective& obj) {
  SolveResult r;
  r.visible = true;
  r.value = obj.at_zero();
  r.s_star = s;
  r.t_star = t;
  r.chord.a = s;
  r.chord.b = t;
  r.path_s.points = {s};
  r.path_s.ids = {kNone};
  r.path_t.points = {t};
  r.path_t.ids = {kNone};
  return r;
}

}  // namespace

double phi_from_theta(const SweepGeometry& g, std::size_t pivot, double theta) {
  return g.turn(pivot) * (theta - theta_in(g, pivot));
}

double theta_from_phi(const SweepGeometry& g, std::size_t pivot, double phi) {
  return theta_in(g, pivot) + g.turn(pivot) * phi;
}

IntervalProblem make_problem(const SweepGeometry& g, std::size_t pivot, const SweepPiece& piece,
                             const Objective& obj) {
  IntervalProblem p;
  p.pivot = g.path().points[pivot];
  p.s = piece.s;
  p.t = piece.t;
  p.objective = obj;
  const double base = theta_in(g, pivot);
  if (g.turn(pivot) > 0) {
    p.theta_lo = base + piece.phi_lo;
    p.theta_hi = base + piece.phi_hi;
  } else {
    p.theta_lo = base - piece.phi_hi;
    p.theta_hi = base - piece.phi_lo;
  }
  return p;
}

SolveTrace solve_with_trace(const Triangulation& tri, Point s, Point t, const Objective& obj) {
  SolveTrace trace;
  const SweepGeometry g(tri, s, t);
  if (g.visible()) {
    trace.result = visible_result(s, t, obj);
    return trace;
  }
  std::vector<SweepInterval> intervals;
  trace.events = compute_events(g, &intervals);

  Best best(g, obj);
  std::size_t piece_id = 0;
  for (const SweepInterval& iv : intervals) {
    if (iv.pieces.empty()) {
      best.offer(trace.events.events[iv.first_event].line, piece_id);
      continue;
    }
    for (std::size_t m = 0; m < iv.pieces.size(); ++m, ++piece_id) {
      const SweepPiece& piece = iv.pieces[m];
      best.offer(trace.events.events[iv.first_event + m].line, piece_id);
      const LocalOptimum opt = minimize_interval(make_problem(g, iv.pivot_index, piece, obj));
      trace.pieces.push_back(piece);
      trace.piece_pivot.push_back(iv.pivot_index);
      trace.optima.push_back(opt);
      if (opt.at != OptimumAt::Interior) continue;
      // An optimum at a piece end is the exact event line, which is offered anyway;
      // rebuilding it from the angle could tip the chord past the path edge.
      const double phi = phi_from_theta(g, iv.pivot_index, opt.theta);
      if (phi - piece.phi_lo > kEndSnap && piece.phi_hi - phi > kEndSnap)
        best.offer(g.line(iv.pivot_index, phi), piece_id);
    }
  }
  best.offer(trace.events.events.back().line, piece_id == 0 ? 0 : piece_id - 1);
  trace.result = best.result();
  return trace;
}

SolveResult solve(const Triangulation& tri, Point s, Point t, const Objective& obj) {
  return solve_with_trace(tri, s, t, obj).result;
}

SolveResult solve(const SimplePolygon& poly, Point s, Point t, const Objective& obj) {
  const Triangulation tri(poly);
  return solve(tri, s, t, obj);
}

}  // namespace pairvis
