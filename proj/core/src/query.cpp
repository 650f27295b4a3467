#include "pairvis/query.hpp"

#include <algorithm>

#include "pairvis/geodesics.hpp"
#include "pairvis/interval.hpp"
#include "pairvis/solver.hpp"
#include "pairvis/sweep.hpp"

namespace pairvis {

namespace {

struct Probe {
  LineOfSight line;
  SegmentDistance ds, dt;
  // Sign of this difference changes once along the sweep.
  double f() const { return ds.distance - dt.distance; }
  double value() const { return std::max(ds.distance, dt.distance); }
};

Probe probe(const SweepGeometry& g, LineOfSight l) {
  SegmentDistance ds = g.distance_s(l), dt = g.distance_t(l);
  return {std::move(l), std::move(ds), std::move(dt)};
}

QueryAnswer answer_from(const Probe& p, std::size_t pivot_index) {
  QueryAnswer a;
  a.value = p.value();
  a.ds = p.ds.distance;
  a.dt = p.dt.distance;
  a.s_star = p.ds.closest;
  a.t_star = p.dt.closest;
  a.chord = p.line.chord;
  a.pivot = p.line.pivot;
  a.pivot_index = pivot_index;
  a.through = p.line.through;
  a.theta = p.line.theta;
  return a;
}

// Boundary vertices met by a chord end moving from `from` to `to` in
// rotation direction sigma (positions doubled so edges sit at odd slots).
std::vector<std::uint32_t> chain_between(const RayHit& from, const RayHit& to, int sigma,
                                         std::size_t n) {
  auto slot = [](const RayHit& h) -> long {
    return h.vertex != kNone ? 2L * h.vertex : 2L * h.edge + 1;
  };
  const long m = 2L * static_cast<long>(n);
  const long p0 = slot(from);
  const long span = ((sigma * (slot(to) - p0)) % m + m) % m;
  std::vector<std::uint32_t> out;
  for (long k = 1; k < span; ++k) {
    const long p = ((p0 + sigma * k) % m + m) % m;
    if (p % 2 == 0) out.push_back(static_cast<std::uint32_t>(p / 2));
  }
  return out;
}

}  // namespace

QueryAnswer QueryStructure::query_minmax(Point s, Point t) const {
  const SweepGeometry g(tri_, s, t, false);
  if (g.visible()) {
    QueryAnswer a;
    a.visible = true;
    a.s_star = s;
    a.t_star = t;
    a.chord.a = s;
    a.chord.b = t;
    return a;
  }

  // Stage 1: chords along the edges of pi(s,t). The first edge has s on
  // its chord (f < 0), the last has t on it (f >= 0).
  const std::size_t edges = g.path().size() - 1;
  auto along_edge = [&](std::size_t j) { return j == 0 ? g.edge_line(1, false) : g.edge_line(j, true); };
  std::size_t lo = 0, hi = edges - 1;
  Probe p_lo = probe(g, along_edge(lo)), p_hi = probe(g, along_edge(hi));
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    Probe pm = probe(g, along_edge(mid));
    if (pm.f() >= 0.0) {
      hi = mid;
      p_hi = std::move(pm);
    } else {
      lo = mid;
      p_lo = std::move(pm);
    }
  }
  const std::size_t i = hi;
  if (p_hi.f() == 0.0) return answer_from(p_hi, i);
  Probe b_lo{g.edge_line(i, false), p_lo.ds, p_lo.dt};
  Probe b_hi{g.edge_line(i, true), p_hi.ds, p_hi.dt};

  // Stage 2: boundary vertices passed by either chord end. Each vertex u
  // stands for the chord through the first edge of pi(v_i, u).
  const Point v = g.path().points[i];
  for (int sense : {+1, -1}) {
    const RayHit& from = sense > 0 ? b_lo.line.chord.hit_b : b_lo.line.chord.hit_a;
    const RayHit& to = sense > 0 ? b_hi.line.chord.hit_b : b_hi.line.chord.hit_a;
    std::vector<std::uint32_t> chain = chain_between(from, to, g.turn(i), polygon().size());
    std::erase(chain, g.pivot_vertex(i));
    long a = -1, b = static_cast<long>(chain.size());
    while (b - a > 1) {
      const long mid = (a + b) / 2;
      const GeodesicPath p = shortest_path(tri_, v, polygon().vertex(chain[static_cast<std::size_t>(mid)]));
      const Point first = p.size() < 2 ? p.back() : p.points[1];
      const double phi = g.phi_of(i, (first - v) * static_cast<double>(sense));
      // Vertices whose chord falls outside the current bracket only steer the search.
      if (!(phi > b_lo.line.phi)) {
        a = mid;
        continue;
      }
      if (!(phi < b_hi.line.phi)) {
        b = mid;
        continue;
      }
      Probe pm = probe(g, g.line_through(i, first, sense));
      if (pm.f() >= 0.0) {
        b = mid;
        b_hi = std::move(pm);
      } else {
        a = mid;
        b_lo = std::move(pm);
      }
    }
  }

  // Stage 3: structural breakpoints inside the final boundary bracket.
  const std::vector<double> bp = structure_breakpoints(g, i, b_lo.line, b_hi.line);
  std::size_t ka = 0, kb = bp.size() - 1;
  Probe q_lo = b_lo, q_hi = b_hi;
  while (kb - ka > 1) {
    const std::size_t mid = (ka + kb) / 2;
    Probe pm = probe(g, g.line(i, bp[mid]));
    if (pm.f() >= 0.0) {
      kb = mid;
      q_hi = std::move(pm);
    } else {
      ka = mid;
      q_lo = std::move(pm);
    }
  }

  const Probe* best = &q_lo;
  std::optional<Probe> q_opt;
  if (bp[kb] > bp[ka]) {
    const SweepPiece piece = classify_piece(g, i, bp[ka], bp[kb]);
    const LocalOptimum opt = minimize_interval(make_problem(g, i, piece, Objective::min_max()));
    const double phi = phi_from_theta(g, i, opt.theta);
    // Near an end the bracketing probe already holds the exact line.
    if (opt.at == OptimumAt::Interior && phi - bp[ka] > 1e-12 && bp[kb] - phi > 1e-12)
      q_opt = probe(g, g.line(i, phi));
  }
  auto better = [](const Probe& x, const Probe& cur) {
    return x.value() < cur.value() - 1e-12 * (1.0 + cur.value());
  };
  if (q_opt && better(*q_opt, *best)) best = &*q_opt;
  if (better(q_hi, *best)) best = &q_hi;
  return answer_from(*best, i);
}

}  // namespace pairvis
