#pragma once

// Shared fixtures and an independent sampling model of the rotating chord.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pairvis/generators.hpp"
#include "pairvis/oracle.hpp"
#include "pairvis/polygon.hpp"
#include "pairvis/query.hpp"
#include "pairvis/solver.hpp"
#include "pairvis/sweep.hpp"
#include <algorithm>
#include <set>
#include <string>

namespace pairvis::testing {

inline SimplePolygon l_polygon() {
  return SimplePolygon::validate_and_normalize({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}
inline constexpr Point kLs{0.5, 1.75};
inline constexpr Point kLt{1.75, 0.25};

inline SimplePolygon zigzag_polygon() {
  return SimplePolygon::validate_and_normalize(
      {{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
}
inline constexpr Point kZs{1, 3};
inline constexpr Point kZt{5, 3};

inline SimplePolygon unit_square() {
  return SimplePolygon::validate_and_normalize({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

struct RandomInstance {
  SimplePolygon polygon;
  Point s, t;
};

inline RandomInstance random_instance(std::size_t n, std::uint64_t seed) {
  SimplePolygon poly = SimplePolygon::validate_and_normalize(random_two_opt_polygon(n, seed));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Point s = random_point_in(poly, rng), t = random_point_in(poly, rng);
  return {std::move(poly), s, t};
}

// Combinatorial state of the chord and of both nearest-point geodesics at one
// sampled direction, computed with brute-force geometry only.
struct SampledState {
  long edge_minus = -1, edge_plus = -1;  // polygon edges holding the chord ends
  long anchor_s = -1, anchor_t = -1;     // last geodesic vertex, -1 for the source itself
  bool end_s = false, end_t = false;     // geodesic ends at a chord endpoint
  long foot_s = -1, foot_t = -1;         // polygon vertex the geodesic ends at, if any

  bool operator==(const SampledState&) const = default;
};

class SweepSampler {
 public:
  SweepSampler(const SimplePolygon& poly, Point s, Point t)
      : geo_(poly), s_(s), t_(t), path_(geo_.shortest_path(s, t)) {
    dist_s_ = geo_.distances_from(s);
    dist_t_ = geo_.distances_from(t);
  }

  const GeodesicPath& path() const { return path_; }

  // Rotation frame at path index i: incoming direction, turn sign, sweep angle.
  Point d_in(std::size_t i) const { return normalized(path_.points[i] - path_.points[i - 1]); }
  int turn(std::size_t i) const {
    return cross(path_.points[i] - path_.points[i - 1], path_.points[i + 1] - path_.points[i]) > 0 ? 1 : -1;
  }
  double sweep(std::size_t i) const {
    const Point a = d_in(i), b = normalized(path_.points[i + 1] - path_.points[i]);
    return std::atan2(std::abs(cross(a, b)), dot(a, b));
  }
  Point direction(std::size_t i, double phi) const {
    const double c = std::cos(turn(i) * phi), sn = std::sin(turn(i) * phi);
    const Point d = d_in(i);
    return {c * d.x - sn * d.y, sn * d.x + c * d.y};
  }

  // Chord ends: first the s side, then the t side.
  Segment chord(std::size_t i, double phi) const {
    const Point d = direction(i, phi);
    const Segment c = geo_.chord(path_.points[i], d);
    return dot(c.b - c.a, d) >= 0.0 ? c : Segment{c.b, c.a};
  }

  double distance(bool from_s, const Segment& c, Point* closest) const {
    return geo_.distance_to_segment(from_s ? s_ : t_, from_s ? dist_s_ : dist_t_, c, closest);
  }

  SampledState state(std::size_t i, double phi) const {
    const Segment c = chord(i, phi);
    SampledState st;
    st.edge_minus = edge_at(c.a);
    st.edge_plus = edge_at(c.b);
    side(true, c, st.anchor_s, st.end_s, st.foot_s);
    side(false, c, st.anchor_t, st.end_t, st.foot_t);
    return st;
  }

 private:
  long edge_at(Point p) const {
    const SimplePolygon& poly = geo_.polygon();
    long best = -1;
    double bd = INFINITY;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const Segment sg = poly.edge(e);
      const Point d = sg.b - sg.a;
      const double u = std::clamp(dot(p - sg.a, d) / dot(d, d), 0.0, 1.0);
      const double dd = pairvis::distance(p, sg.a + d * u);
      if (dd < bd) {
        bd = dd;
        best = static_cast<long>(e);
      }
    }
    return best;
  }

  void side(bool from_s, const Segment& c, long& anchor, bool& at_end, long& foot) const {
    Point q;
    const double total = distance(from_s, c, &q);
    // A foot landing on a corner is that corner; rounding would put it outside.
    foot = -1;
    for (std::size_t v = 0; v < geo_.polygon().size(); ++v)
      if (pairvis::distance(geo_.polygon().vertex(v), q) <= 1e-9 * (1.0 + total)) {
        q = geo_.polygon().vertex(v);
        foot = static_cast<long>(v);
      }
    const Point src = from_s ? s_ : t_;
    const std::vector<double>& dist = from_s ? dist_s_ : dist_t_;
    // Near-ties go to the straighter path, so collinear vertices never count as bends.
    const double tol = 1e-12 * (1.0 + total);
    double best_len = geo_.visible(src, q) ? pairvis::distance(src, q) : INFINITY;
    double best_prefix = 0.0;
    anchor = -1;
    for (std::size_t u = 0; u < dist.size(); ++u) {
      const Point pu = geo_.polygon().vertex(u);
      const double len = dist[u] + pairvis::distance(pu, q);
      if (pairvis::distance(pu, q) <= 1e-7 * (1.0 + total)) continue;  // sits at the foot, not a bend
      if (len > best_len + tol || (len >= best_len - tol && dist[u] >= best_prefix)) continue;
      if (!geo_.visible(pu, q)) continue;
      best_len = len;
      best_prefix = dist[u];
      anchor = static_cast<long>(u);
    }
    (void)total;
    const double scale = 1e-9 * (1.0 + pairvis::distance(c.a, c.b));
    at_end = pairvis::distance(q, c.a) <= scale || pairvis::distance(q, c.b) <= scale;
  }

  OracleGeometry geo_;
  Point s_, t_;
  GeodesicPath path_;
  std::vector<double> dist_s_, dist_t_;
};

// Brackets (phi_k, phi_k+1) of pivot i between whose samples the state changes.
struct ChangeBracket {
  double lo, hi;
};

inline std::vector<ChangeBracket> sampled_changes(const SweepSampler& sm, std::size_t i, int samples) {
  std::vector<ChangeBracket> out;
  const double sweep = sm.sweep(i);
  double prev_phi = 0.5 * sweep / samples;
  SampledState prev = sm.state(i, prev_phi);
  for (int k = 1; k < samples; ++k) {
    const double phi = (k + 0.5) * sweep / samples;
    SampledState cur = sm.state(i, phi);
    if (!(cur == prev)) out.push_back({prev_phi, phi});
    prev = cur;
    prev_phi = phi;
  }
  return out;
}

// Stage-1 check: the query's pivot is the solver's, or it ties. A tie is a
// chord along a path edge (tangent at both of its vertices) or a plateau
// where the best chord of the query's pivot is as good as the optimum.
inline bool stage1_pivot_ok(const SweepGeometry& g, const SolveTrace& tr, const QueryAnswer& q) {
  const SolveResult& r = tr.result;
  if (r.visible || q.visible) return r.visible == q.visible;
  if (r.pivot_index == q.pivot_index) return true;
  if (r.pivot && q.pivot && orientation(*r.pivot, r.through, *q.pivot) == Orientation::Collinear) return true;
  double own = INFINITY;
  for (std::size_t k = 0; k < tr.optima.size(); ++k)
    if (tr.piece_pivot[k] == q.pivot_index) own = std::min(own, tr.optima[k].value);
  // A chord along a path edge belongs to the pivots at both of its ends.
  for (bool at_end : {false, true}) {
    const LineOfSight l = g.edge_line(q.pivot_index, at_end);
    own = std::min(own, std::max(g.distance_s(l).distance, g.distance_t(l).distance));
  }
  return own <= r.value + 1e-9 * (1.0 + r.value);
}

// Replays the event lines: |pi(s,l)| must not decrease, |pi(t,l)| must not
// increase, and a vertex that drops out of pi(s,l) (or, replayed backwards,
// out of pi(t,l)) never comes back. Returns an empty string on success.
inline std::string check_sweep_invariants(const SweepGeometry& g, const EventSequence& ev) {
  const double tol = 1e-9 * (1.0 + g.triangulation().polygon().bounds().diagonal());
  std::vector<std::vector<std::uint32_t>> ids_s, ids_t;
  double prev_s = -INFINITY, prev_t = INFINITY;
  for (std::size_t k = 0; k < ev.events.size(); ++k) {
    const SegmentDistance ds = g.distance_s(ev.events[k].line), dt = g.distance_t(ev.events[k].line);
    if (ds.distance < prev_s - tol) return "|pi(s,l)| decreases at event " + std::to_string(k);
    if (dt.distance > prev_t + tol) return "|pi(t,l)| increases at event " + std::to_string(k);
    prev_s = ds.distance;
    prev_t = dt.distance;
    auto vertices = [](const GeodesicPath& p) {
      std::vector<std::uint32_t> v;
      for (std::uint32_t id : p.ids)
        if (id != kNone) v.push_back(id);
      std::sort(v.begin(), v.end());
      return v;
    };
    ids_s.push_back(vertices(ds.path));
    ids_t.push_back(vertices(dt.path));
  }
  auto no_return = [](const std::vector<std::vector<std::uint32_t>>& seq) {
    std::set<std::uint32_t> gone;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      for (std::uint32_t v : seq[k])
        if (gone.count(v)) return false;
      if (k + 1 < seq.size())
        for (std::uint32_t v : seq[k])
          if (!std::binary_search(seq[k + 1].begin(), seq[k + 1].end(), v)) gone.insert(v);
    }
    return true;
  };
  if (!no_return(ids_s)) return "a vertex re-enters pi(s,l)";
  std::reverse(ids_t.begin(), ids_t.end());
  if (!no_return(ids_t)) return "a vertex re-enters pi(t,l) in reverse order";
  return {};
}

}  // namespace pairvis::testing
