#include "pairvis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pairvis/errors.hpp"

namespace pairvis {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double param_on(Point p, Point q, Point x) {
  const Point d = q - p;
  return std::clamp(dot(x - p, d) / dot(d, d), 0.0, 1.0);
}

Point rotate(Point v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

OracleGeometry::OracleGeometry(const SimplePolygon& polygon, double boundary_tolerance)
    : polygon_(polygon), tol_(boundary_tolerance), scale_(std::max(polygon.bounds().diagonal(), 1.0)) {
  const std::size_t n = polygon_.size();
  vis_.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      vis_[i][j] = vis_[j][i] = visible(polygon_.vertex(i), polygon_.vertex(j)) ? 1 : 0;
}

bool OracleGeometry::inside_tolerant(Point p) const {
  if (polygon_.classify(p) != PointClass::Outside) return true;
  for (std::size_t i = 0; i < polygon_.size(); ++i)
    if (distance(p, closest_point_on_segment(p, polygon_.edge(i))) <= tol_ * scale_) return true;
  return false;
}

bool OracleGeometry::inside_along(Point p, Point dir) const {
  if (polygon_.classify(p) != PointClass::Outside) return true;
  const Point u = normalized(dir);
  for (std::size_t i = 0; i < polygon_.size(); ++i) {
    const Segment e = polygon_.edge(i);
    if (std::abs(cross(u, normalized(e.b - e.a))) > 1e-6) continue;
    if (distance(p, closest_point_on_segment(p, e)) <= tol_ * scale_) return true;
  }
  return false;
}

bool OracleGeometry::visible(Point p, Point q) const {
  if (!inside_tolerant(p) || !inside_tolerant(q)) return false;
  // Below the boundary slack a segment is a point.
  if (distance(p, q) <= tol_ * scale_) return true;
  const Segment pq{p, q};
  std::vector<double> params{0.0, 1.0};
  for (std::size_t i = 0; i < polygon_.size(); ++i) {
    const Segment e = polygon_.edge(i);
    const auto x = segments_intersect(pq, e);
    if (segments_cross_properly(pq, e)) {
      // Rounded endpoints may poke through the edge they lie on.
      const double slack = tol_ * scale_;
      if (distance(x.p, p) > slack && distance(x.p, q) > slack) return false;
    }
    if (x.kind == IntersectionKind::None) continue;
    params.push_back(param_on(p, q, x.p));
    if (x.kind == IntersectionKind::Overlap) params.push_back(param_on(p, q, x.q));
  }
  std::sort(params.begin(), params.end());
  const double min_gap = std::max(1e-15, tol_ * scale_ / distance(p, q));
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i] - params[i - 1] <= min_gap) continue;
    if (!inside_along(pq.at(0.5 * (params[i] + params[i - 1])), q - p)) return false;
  }
  return true;
}

double OracleGeometry::ray_exit(Point origin, Point dir) const {
  const Point far = origin + dir * ((2.0 * scale_ + 1.0) / norm(dir));
  const Segment ray{origin, far};
  std::vector<double> params{0.0, 1.0};
  for (std::size_t i = 0; i < polygon_.size(); ++i) {
    const auto x = segments_intersect(ray, polygon_.edge(i));
    if (x.kind == IntersectionKind::None) continue;
    params.push_back(param_on(origin, far, x.p));
    if (x.kind == IntersectionKind::Overlap) params.push_back(param_on(origin, far, x.q));
  }
  std::sort(params.begin(), params.end());
  double reached = 0.0;
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i] - params[i - 1] <= 1e-15) continue;
    if (!inside_along(ray.at(0.5 * (params[i] + params[i - 1])), dir)) break;
    reached = params[i];
  }
  return reached * distance(origin, far);
}

Segment OracleGeometry::chord(Point anchor, Point dir) const {
  const Point u = dir * (1.0 / norm(dir));
  return {anchor - u * ray_exit(anchor, u * -1.0), anchor + u * ray_exit(anchor, u)};
}

std::vector<double> OracleGeometry::distances_from(Point src, std::vector<std::size_t>* parent) const {
  const std::size_t n = polygon_.size();
  std::vector<double> dist(n, kInf);
  std::vector<std::size_t> par(n, n);
  std::vector<char> done(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (visible(src, polygon_.vertex(i))) dist[i] = distance(src, polygon_.vertex(i));
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && dist[i] < kInf && (u == n || dist[i] < dist[u])) u = i;
    if (u == n) break;
    done[u] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || !vis_[u][i]) continue;
      const double nd = dist[u] + distance(polygon_.vertex(u), polygon_.vertex(i));
      if (nd < dist[i]) {
        dist[i] = nd;
        par[i] = u;
      }
    }
  }
  if (parent) *parent = std::move(par);
  return dist;
}

GeodesicPath OracleGeometry::shortest_path(Point p, Point q) const {
  if (!inside_tolerant(p) || !inside_tolerant(q))
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");
  GeodesicPath path;
  auto id_of = [&](Point x) {
    for (std::uint32_t i = 0; i < polygon_.size(); ++i)
      if (polygon_.vertex(i) == x) return i;
    return kNone;
  };
  if (p == q) {
    path.points = {p};
    path.ids = {id_of(p)};
    return path;
  }
  if (visible(p, q)) {
    path.points = {p, q};
    path.ids = {id_of(p), id_of(q)};
    path.length = distance(p, q);
    return path;
  }
  std::vector<std::size_t> parent;
  const auto dist = distances_from(p, &parent);
  const std::size_t n = polygon_.size();
  std::size_t last = n;
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] == kInf) continue;
    const double cand = dist[i] + distance(polygon_.vertex(i), q);
    if (cand < best && visible(polygon_.vertex(i), q)) {
      best = cand;
      last = i;
    }
  }
  if (last == n) throw Error(ErrorCode::InternalError, "visibility graph is disconnected");
  std::vector<std::size_t> chain;
  for (std::size_t v = last; v != n; v = parent[v]) chain.push_back(v);
  path.points.push_back(p);
  path.ids.push_back(id_of(p));
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    path.points.push_back(polygon_.vertex(*it));
    path.ids.push_back(static_cast<std::uint32_t>(*it));
  }
  path.points.push_back(q);
  path.ids.push_back(id_of(q));
  for (std::size_t i = 1; i < path.points.size(); ++i)
    path.length += distance(path.points[i - 1], path.points[i]);
  return path;
}

double OracleGeometry::distance_to_segment(Point src, const std::vector<double>& dist, const Segment& seg,
                                           Point* closest) const {
  struct Cand {
    double value;
    Point from;
    Point to;
  };
  std::vector<Cand> cands;
  const std::size_t n = polygon_.size();
  auto add_from = [&](Point w, double d) {
    if (d == kInf) return;
    cands.push_back({d + distance(w, seg.a), w, seg.a});
    cands.push_back({d + distance(w, seg.b), w, seg.b});
    const Point f = closest_point_on_segment(w, seg);
    cands.push_back({d + distance(w, f), w, f});
  };
  add_from(src, 0.0);
  for (std::size_t i = 0; i < n; ++i) add_from(polygon_.vertex(i), dist[i]);
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.value < y.value; });
  for (const Cand& c : cands) {
    if (visible(c.from, c.to)) {
      if (closest) *closest = c.to;
      return c.value;
    }
  }
  throw Error(ErrorCode::InternalError, "segment is not reachable");
}

GeodesicPath oracle_shortest_path(const SimplePolygon& polygon, Point p, Point q) {
  return OracleGeometry(polygon).shortest_path(p, q);
}

double oracle_evaluate_chord(const OracleGeometry& geo, Point s, Point t, const Segment& chord,
                             const Objective& obj) {
  const auto ds = geo.distances_from(s);
  const auto dt = geo.distances_from(t);
  return obj.combine(geo.distance_to_segment(s, ds, chord), geo.distance_to_segment(t, dt, chord));
}

OracleResult oracle_solve(const SimplePolygon& polygon, Point s, Point t, const Objective& obj,
                          const OracleConfig& cfg) {
  if (cfg.angular_samples < 2) throw Error(ErrorCode::InvalidInput, "need at least 2 angular samples");
  const OracleGeometry geo(polygon, cfg.boundary_tolerance);
  if (!geo.visible(s, s) || !geo.visible(t, t))
    throw Error(ErrorCode::OutsidePolygon, "point lies outside the polygon");

  OracleResult res;
  if (geo.visible(s, t)) {
    res.visible = true;
    res.value = obj.at_zero();
    res.s_star = s;
    res.t_star = t;
    res.chord = {s, t};
    return res;
  }

  const GeodesicPath path = geo.shortest_path(s, t);
  const auto dist_s = geo.distances_from(s);
  const auto dist_t = geo.distances_from(t);
  const double diam = std::max(polygon.bounds().diagonal(), 1.0);
  res.value = kInf;

  auto evaluate = [&](std::size_t pivot, Point dir) {
    const Segment c = geo.chord(path.points[pivot], dir);
    Point ss, tt;
    const double ds = geo.distance_to_segment(s, dist_s, c, &ss);
    const double dt = geo.distance_to_segment(t, dist_t, c, &tt);
    const double v = obj.combine(ds, dt);
    ++res.evaluations;
    if (v < res.value) {
      res.value = v;
      res.ds = ds;
      res.dt = dt;
      res.s_star = ss;
      res.t_star = tt;
      res.chord = c;
      res.pivot = pivot;
    }
    return v;
  };

  const std::size_t samples = static_cast<std::size_t>(cfg.angular_samples);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const Point v = path.points[i];
    const Point d_in = normalized(v - path.points[i - 1]);
    const Point d_out = normalized(path.points[i + 1] - v);
    const double turn = cross(d_in, d_out);
    const double sweep = std::atan2(std::fabs(turn), dot(d_in, d_out));
    const double sigma = turn >= 0.0 ? 1.0 : -1.0;
    auto dir_at = [&](double tau) { return rotate(d_in, sigma * tau * sweep); };
    auto in_range = [&](Point d) {
      return sigma * cross(d_in, d) >= 0.0 && sigma * cross(d, d_out) >= 0.0;
    };

    std::vector<double> values(samples);
    for (std::size_t k = 0; k < samples; ++k)
      values[k] = evaluate(i, dir_at(static_cast<double>(k) / static_cast<double>(samples - 1)));
    res.error_bound = std::max(res.error_bound, 2.0 * diam * sweep / static_cast<double>(samples - 1));

    // Chords through a polygon vertex are where the objective may jump.
    for (std::size_t w = 0; w < polygon.size(); ++w) {
      const Point d = polygon.vertex(w) - v;
      if (d.x == 0.0 && d.y == 0.0) continue;
      for (const Point cand : {d, d * -1.0}) {
        if (!in_range(normalized(cand))) continue;
        evaluate(i, cand);
        const double ang = 1e-9;
        for (const Point r : {rotate(cand, ang), rotate(cand, -ang)})
          if (in_range(normalized(r))) evaluate(i, r);
      }
    }

    if (!cfg.refine || sweep == 0.0) continue;
    std::vector<std::size_t> order(samples);
    std::iota(order.begin(), order.end(), 0);
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(cfg.refine_candidates), samples);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const double step = 1.0 / static_cast<double>(samples - 1);
    for (std::size_t r = 0; r < keep; ++r) {
      const double center = static_cast<double>(order[r]) * step;
      double lo = std::max(0.0, center - step), hi = std::min(1.0, center + step);
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = evaluate(i, dir_at(x1)), f2 = evaluate(i, dir_at(x2));
      for (int it = 0; it < 60; ++it) {
        if (f1 <= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - g * (hi - lo);
          f1 = evaluate(i, dir_at(x1));
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + g * (hi - lo);
          f2 = evaluate(i, dir_at(x2));
        }
      }
    }
  }
  return res;
}

}  // namespace pairvis
