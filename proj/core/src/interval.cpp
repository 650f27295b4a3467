#include "pairvis/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "pairvis/errors.hpp"

namespace pairvis {

namespace {

constexpr double kPi = std::numbers::pi;

struct Leg {
  double value;
  Point star;
};

Leg leg_at(const LegStructure& leg, Point v, double theta) {
  const Point d = direction_of(theta);
  const Point w = leg.anchor - v;
  if (leg.leg == LegCase::Foot) return {leg.prefix + std::abs(cross(d, w)), v + d * dot(w, d)};
  const std::optional<Point> x = line_intersection(v, d, leg.edge.a, leg.edge.b - leg.edge.a);
  const Point star = x ? *x : leg.edge.a;
  return {leg.prefix + distance(leg.anchor, star), star};
}

// Max-type objectives compare weight * d + offset on both sides.
struct Scaled {
  double w = 1.0, c = 0.0;
};

void scales(const Objective& o, Scaled& s, Scaled& t) {
  switch (o.kind) {
    case Objective::Kind::WeightedMinMax: s = {o.lambda, 0.0}; t = {1.0 - o.lambda, 0.0}; break;
    case Objective::Kind::OffsetMinMax: s = {1.0, o.alpha}; t = {1.0, o.beta}; break;
    default: s = {}; t = {}; break;
  }
}

// c0 + c1 cos(theta) + c2 sin(theta)
struct Trig {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

// Foot leg on a range where cross(d, w) keeps sign `sg`.
Trig foot_trig(const LegStructure& leg, Point v, int sg) {
  const Point w = leg.anchor - v;
  return {leg.prefix, sg * w.y, -sg * w.x};
}

void add_periodic(std::vector<double>& out, double base, double period, double lo, double hi) {
  if (!std::isfinite(base)) return;
  const double k0 = std::ceil((lo - base) / period), k1 = std::floor((hi - base) / period);
  for (double k = k0; k <= k1; k += 1.0) out.push_back(base + k * period);
}

// Stationary points of c1 cos + c2 sin.
void add_stationary(std::vector<double>& out, const Trig& f, double lo, double hi) {
  if (f.c1 == 0.0 && f.c2 == 0.0) return;
  add_periodic(out, std::atan2(f.c2, f.c1), kPi, lo, hi);
}

// Roots of c0 + c1 cos + c2 sin.
void add_roots(std::vector<double>& out, const Trig& f, double lo, double hi) {
  const double r = std::hypot(f.c1, f.c2);
  if (r == 0.0) return;
  const double ratio = -f.c0 / r;
  if (std::abs(ratio) > 1.0) return;
  const double gamma = std::atan2(f.c2, f.c1), delta = std::acos(ratio);
  add_periodic(out, gamma + delta, 2.0 * kPi, lo, hi);
  add_periodic(out, gamma - delta, 2.0 * kPi, lo, hi);
}

template <class F>
double golden_section(F&& f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - g * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + g * (b - a); f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

template <class F>
double bisect_root(F&& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
    const double m = 0.5 * (a + b), fm = f(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m; fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

LegEvaluation evaluate_at(const IntervalProblem& prob, double theta) {
  const Leg s = leg_at(prob.s, prob.pivot, theta), t = leg_at(prob.t, prob.pivot, theta);
  return {s.value, t.value, s.star, t.star};
}

LocalOptimum minimize_interval(const IntervalProblem& prob) {
  const double lo = prob.theta_lo, hi = prob.theta_hi;
  if (!(lo <= hi)) throw Error(ErrorCode::EmptyInterval, "empty angular interval");
  const Objective& obj = prob.objective;
  const Point v = prob.pivot;
  Scaled ks, kt;
  scales(obj, ks, kt);
  auto value = [&](double th) {
    const LegEvaluation e = evaluate_at(prob, th);
    return obj.combine(e.ds, e.dt);
  };
  auto balance = [&](double th) {
    const LegEvaluation e = evaluate_at(prob, th);
    return ks.w * e.ds + ks.c - (kt.w * e.dt + kt.c);
  };

  std::vector<double> cand{lo, hi};
  if (hi > lo) {
    // Branch switches of the absolute values split the range into regimes.
    std::vector<double> cuts{lo, hi};
    for (const LegStructure* leg : {&prob.s, &prob.t}) {
      const Point w = leg->anchor - v;
      if (leg->leg == LegCase::Foot && (w.x != 0.0 || w.y != 0.0))
        add_periodic(cuts, std::atan2(w.y, w.x), kPi, lo, hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cand.insert(cand.end(), cuts.begin(), cuts.end());

    for (std::size_t r = 0; r + 1 < cuts.size(); ++r) {
      const double a = cuts[r], b = cuts[r + 1];
      if (!(b > a)) continue;
      if (prob.s.leg == LegCase::Foot && prob.t.leg == LegCase::Foot) {
        const Point dm = direction_of(0.5 * (a + b));
        const int sgs = cross(dm, prob.s.anchor - v) < 0.0 ? -1 : 1;
        const int sgt = cross(dm, prob.t.anchor - v) < 0.0 ? -1 : 1;
        const Trig fs = foot_trig(prob.s, v, sgs), ft = foot_trig(prob.t, v, sgt);
        if (!obj.is_max_type()) {
          add_stationary(cand, {fs.c0 + ft.c0, fs.c1 + ft.c1, fs.c2 + ft.c2}, a, b);
        } else {
          add_stationary(cand, fs, a, b);
          add_stationary(cand, ft, a, b);
          add_roots(cand,
                    {ks.w * fs.c0 + ks.c - kt.w * ft.c0 - kt.c, ks.w * fs.c1 - kt.w * ft.c1,
                     ks.w * fs.c2 - kt.w * ft.c2},
                    a, b);
        }
        continue;
      }
      // A sliding chord end has no convenient closed form: bracket on a
      // uniform grid, then refine local minima and balance crossings.
      constexpr int kGrid = 64;
      std::vector<double> th(kGrid + 1), h(kGrid + 1), bal(kGrid + 1);
      for (int j = 0; j <= kGrid; ++j) {
        th[j] = j == kGrid ? b : a + (b - a) * j / kGrid;
        h[j] = value(th[j]);
        bal[j] = balance(th[j]);
      }
      for (int j = 0; j <= kGrid; ++j) {
        const bool left_ok = j == 0 || h[j] <= h[j - 1];
        const bool right_ok = j == kGrid || h[j] <= h[j + 1];
        if (left_ok && right_ok)
          cand.push_back(golden_section(value, th[std::max(0, j - 1)], th[std::min(kGrid, j + 1)]));
        if (obj.is_max_type() && j < kGrid && (bal[j] < 0.0) != (bal[j + 1] < 0.0))
          cand.push_back(bisect_root(balance, th[j], th[j + 1]));
      }
    }
  }

  std::sort(cand.begin(), cand.end());
  LocalOptimum best;
  bool have = false;
  for (double th : cand) {
    th = std::clamp(th, lo, hi);
    const LegEvaluation e = evaluate_at(prob, th);
    const double val = obj.combine(e.ds, e.dt);
    if (have && !(val < best.value - 1e-13 * (1.0 + std::abs(best.value)))) continue;
    have = true;
    best.theta = th;
    best.value = val;
    best.ds = e.ds;
    best.dt = e.dt;
    best.s_star = e.s_star;
    best.t_star = e.t_star;
  }
  best.at = best.theta == lo ? OptimumAt::Left : best.theta == hi ? OptimumAt::Right
                                                                  : OptimumAt::Interior;
  return best;
}

}  // namespace pairvis
