#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pairvis/geodesics.hpp"

namespace pairvis {

// A maximal chord through the pivot vertex of pi(s,t), tangent to the path.
// The chord runs from `chord.a` (s side, the minus part) to `chord.b` (t side).
struct LineOfSight {
  Chord chord;
  std::size_t pivot_index = 0;  // index into pi(s,t)
  Point pivot;
  Point through;       // exact point fixing the chord direction together with the pivot
  double phi = 0.0;    // rotation from the incoming path edge, in [0, sweep angle]
  double theta = 0.0;  // direction angle of a -> b, reduced to [0, pi)
  Segment minus_part() const { return {pivot, chord.a}; }
  Segment plus_part() const { return {pivot, chord.b}; }
};

enum class EventKind { Path, Boundary, BendT1, BendT2 };
const char* to_string(EventKind kind);

inline constexpr unsigned event_flag(EventKind k) { return 1u << static_cast<unsigned>(k); }

struct SweepEvent {
  EventKind kind = EventKind::Path;  // highest priority kind present
  unsigned flags = 0;                // every kind merged into this event
  LineOfSight line;
  Point x;        // chord endpoint on the t side
  Point x_tilde;  // chord endpoint on the s side
  std::size_t pivot_index = 0;
  int side = 0;  // +1 plus part, -1 minus part, 0 both or not applicable
  std::vector<std::uint32_t> vertices;  // polygon vertices met by the chord at this event
  double sort_key = 0.0;                // pivot_index + phi / sweep angle
};

struct EventSequence {
  std::vector<SweepEvent> events;
};

// The two side structures that stay fixed between consecutive events.
enum class LegCase { Foot, EndMinus, EndPlus };

struct LegStructure {
  Point anchor;        // last vertex of the geodesic before the chord
  double prefix = 0.0; // geodesic length from the source to the anchor
  LegCase leg = LegCase::Foot;
  Segment edge;        // boundary edge carrying the chord end, for the end cases
  bool operator==(const LegStructure& o) const { return anchor == o.anchor && leg == o.leg; }
};

struct SweepPiece {
  double phi_lo = 0.0, phi_hi = 0.0;
  LegStructure s, t;
};

struct SweepInterval {
  std::size_t pivot_index = 0;
  double phi_lo = 0.0, phi_hi = 0.0;
  std::size_t first_event = 0;  // the interval runs from this event to the next one
  std::vector<SweepPiece> pieces;
};

// Per-instance sweep state: the two shortest path trees, pi(s,t) and the
// rotation frame at each pivot.
class SweepGeometry {
 public:
  // Without trees every geodesic query runs a funnel over its sleeve instead.
  SweepGeometry(const Triangulation& tri, Point s, Point t, bool build_trees = true);

  const Triangulation& triangulation() const { return *tri_; }
  Point s() const { return s_; }
  Point t() const { return t_; }
  bool has_trees() const { return spt_s_ != nullptr; }
  const ShortestPathTree& tree_s() const { return *spt_s_; }
  const ShortestPathTree& tree_t() const { return *spt_t_; }
  const GeodesicPath& path() const { return path_; }
  bool visible() const { return visible_; }

  // Pivots are path indices 1 .. path().size() - 2.
  std::size_t first_pivot() const { return 1; }
  std::size_t last_pivot() const { return path_.size() - 2; }
  std::uint32_t pivot_vertex(std::size_t i) const { return path_.ids[i]; }
  double sweep_angle(std::size_t i) const { return frames_[i].sweep; }
  int turn(std::size_t i) const { return frames_[i].sigma; }
  Point direction(std::size_t i, double phi) const;
  double phi_of(std::size_t i, Point dir) const;

  LineOfSight line(std::size_t i, double phi) const;
  // Chord through the pivot and `through`; sense -1 means `through` lies on the s side.
  LineOfSight line_through(std::size_t i, Point through, int sense) const;

  // Chord along the incoming (phi = 0) or outgoing (phi = sweep angle) path edge.
  LineOfSight edge_line(std::size_t i, bool outgoing) const;

  SegmentDistance distance_s(const LineOfSight& l) const { return distance_from(l, true); }
  SegmentDistance distance_t(const LineOfSight& l) const { return distance_from(l, false); }
  SegmentDistance distance_from(const LineOfSight& l, bool from_s) const;
  LegStructure structure(const LineOfSight& l, bool from_s) const;
  // Geodesic from s (or t) to a point located by a ray hit.
  GeodesicPath path_from(bool from_s, const RayHit& hit) const;
  // Geodesic from s (or t) to pivot i, read off pi(s,t).
  GeodesicPath path_to_pivot(bool from_s, std::size_t i) const;

  const std::vector<std::uint32_t>& children_s(std::uint32_t v) const { return children_s_[v]; }
  const std::vector<std::uint32_t>& children_t(std::uint32_t v) const { return children_t_[v]; }

 private:
  struct Frame {
    Point d_in;  // unit
    int sigma = 0;
    double sweep = 0.0;
  };
  LineOfSight finish(std::size_t i, Chord c, Point through, double phi) const;

  const Triangulation* tri_;
  Point s_, t_;
  std::unique_ptr<ShortestPathTree> spt_s_, spt_t_;
  GeodesicPath path_;
  bool visible_ = false;
  std::vector<Frame> frames_;
  std::vector<std::vector<std::uint32_t>> children_s_, children_t_;
  Location loc_s_, loc_t_;
  double scale_ = 1.0;
};

EventSequence compute_path_and_boundary_events(const SweepGeometry& g);

// Angles in (lo.phi, hi.phi) where a leg structure may change, bracketed by
// the two ends. Both lines must belong to pivot i and no boundary event may
// lie strictly between them.
std::vector<double> structure_breakpoints(const SweepGeometry& g, std::size_t i,
                                          const LineOfSight& lo, const LineOfSight& hi);
SweepPiece classify_piece(const SweepGeometry& g, std::size_t i, double phi_lo, double phi_hi);

// Splits each interval of `partial` into pieces of constant leg structure and
// inserts a bend event at every structural change. `intervals` receives the pieces.
EventSequence compute_bend_events(const SweepGeometry& g, const EventSequence& partial,
                                  std::vector<SweepInterval>* intervals = nullptr);

inline EventSequence compute_events(const SweepGeometry& g,
                                    std::vector<SweepInterval>* intervals = nullptr) {
  return compute_bend_events(g, compute_path_and_boundary_events(g), intervals);
}

}  // namespace pairvis
