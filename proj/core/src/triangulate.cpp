// Monotone decomposition followed by stack triangulation of each piece.
#include <algorithm>
#include <map>
#include <set>

#include "pairvis/errors.hpp"
#include "pairvis/triangulation.hpp"

namespace pairvis {
namespace {

using Index = std::uint32_t;

// Sweep order: larger y first, ties broken by smaller x.
bool above(Point a, Point b) { return a.y > b.y || (a.y == b.y && a.x < b.x); }

enum class VertexType { Start, End, Split, Merge, Regular };

// Status of the sweep: polygon edges e_i = (v_i, v_{i+1}) that run downward,
// ordered left to right. A key of kNone stands for the probe point.
struct EdgeLess {
  using is_transparent = void;
  std::span<const Point> v;
  const Point* probe;

  Point top(Index e) const { return v[e]; }
  Point bot(Index e) const { return v[e + 1 == v.size() ? 0 : e + 1]; }

  // Sign of p relative to the edge seen from above: < 0 means left.
  int side(Index e, Point p) const { return sign_of(orientation(top(e), bot(e), p)); }

  bool operator()(Index a, Index b) const {
    if (a == b) return false;
    if (a == kNone) return side(b, *probe) < 0;
    if (b == kNone) return side(a, *probe) > 0;
    // Test the edge whose upper end is lower against the other one.
    const bool a_lower = !above(top(a), top(b));
    const Index test = a_lower ? a : b;
    const Index ref = a_lower ? b : a;
    int s = side(ref, top(test));
    if (s == 0) s = side(ref, bot(test));
    // s > 0: `test` lies right of `ref`.
    return a_lower ? s < 0 : s > 0;
  }
};

VertexType classify(std::span<const Point> v, Index i) {
  const std::size_t n = v.size();
  const Point p = v[(i + n - 1) % n], c = v[i], q = v[(i + 1) % n];
  const bool p_below = above(c, p), q_below = above(c, q);
  const bool convex = orientation(p, c, q) == Orientation::CCW;
  if (p_below && q_below) return convex ? VertexType::Start : VertexType::Split;
  if (!p_below && !q_below) return convex ? VertexType::End : VertexType::Merge;
  return VertexType::Regular;
}

std::vector<std::pair<Index, Index>> monotone_diagonals(std::span<const Point> v) {
  const Index n = static_cast<Index>(v.size());
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return above(v[a], v[b]); });

  std::vector<VertexType> type(n);
  for (Index i = 0; i < n; ++i) type[i] = classify(v, i);

  Point probe{};
  std::set<Index, EdgeLess> status(EdgeLess{v, &probe});
  std::vector<Index> helper(n, kNone);
  std::vector<std::pair<Index, Index>> diagonals;

  auto left_of = [&](Index i) -> Index {
    probe = v[i];
    auto it = status.lower_bound(kNone);
    if (it == status.begin()) throw Error(ErrorCode::InternalError, "sweep status lost an edge");
    return *std::prev(it);
  };
  auto fix_up = [&](Index i, Index e) {
    if (helper[e] != kNone && type[helper[e]] == VertexType::Merge) diagonals.emplace_back(i, helper[e]);
  };

  for (Index i : order) {
    const Index prev_edge = (i + n - 1) % n;
    switch (type[i]) {
      case VertexType::Start:
        status.insert(i);
        helper[i] = i;
        break;
      case VertexType::End:
        fix_up(i, prev_edge);
        status.erase(prev_edge);
        break;
      case VertexType::Split: {
        const Index e = left_of(i);
        diagonals.emplace_back(i, helper[e]);
        helper[e] = i;
        status.insert(i);
        helper[i] = i;
        break;
      }
      case VertexType::Merge: {
        fix_up(i, prev_edge);
        status.erase(prev_edge);
        const Index e = left_of(i);
        fix_up(i, e);
        helper[e] = i;
        break;
      }
      case VertexType::Regular:
        if (above(v[prev_edge], v[i])) {
          // Boundary runs downward here, so the interior lies to the right.
          fix_up(i, prev_edge);
          status.erase(prev_edge);
          status.insert(i);
          helper[i] = i;
        } else {
          const Index e = left_of(i);
          fix_up(i, e);
          helper[e] = i;
        }
        break;
    }
  }
  return diagonals;
}

// Half-plane ordered angular comparison of directions from a common center.
bool angle_less(Point c, Point a, Point b) {
  auto upper = [&](Point p) { return p.y > c.y || (p.y == c.y && p.x > c.x); };
  const bool ua = upper(a), ub = upper(b);
  if (ua != ub) return ua;
  return orientation(c, a, b) == Orientation::CCW;
}

// Faces of the polygon graph augmented with the diagonals.
std::vector<std::vector<Index>> monotone_pieces(std::span<const Point> v,
                                                const std::vector<std::pair<Index, Index>>& diags) {
  const Index n = static_cast<Index>(v.size());
  std::vector<std::vector<Index>> adj(n);
  for (Index i = 0; i < n; ++i) {
    adj[i].push_back((i + 1) % n);
    adj[i].push_back((i + n - 1) % n);
  }
  for (auto [a, b] : diags) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Index i = 0; i < n; ++i)
    std::sort(adj[i].begin(), adj[i].end(),
              [&](Index a, Index b) { return angle_less(v[i], v[a], v[b]); });

  std::set<std::pair<Index, Index>> used;
  std::vector<std::vector<Index>> faces;
  auto trace = [&](Index from, Index to) {
    std::vector<Index> face;
    Index u = from, w = to;
    while (used.insert({u, w}).second) {
      face.push_back(u);
      const auto& nb = adj[w];
      const auto pos = std::find(nb.begin(), nb.end(), u) - nb.begin();
      const Index nxt = nb[(pos + nb.size() - 1) % nb.size()];
      u = w;
      w = nxt;
    }
    faces.push_back(std::move(face));
  };
  for (Index i = 0; i < n; ++i)
    if (!used.count({i, (i + 1) % n})) trace(i, (i + 1) % n);
  for (auto [a, b] : diags) {
    if (!used.count({a, b})) trace(a, b);
    if (!used.count({b, a})) trace(b, a);
  }
  return faces;
}

void emit(std::span<const Point> v, std::vector<std::array<Index, 3>>& out, Index a, Index b, Index c) {
  if (orientation(v[a], v[b], v[c]) == Orientation::CW) std::swap(b, c);
  out.push_back({a, b, c});
}

// Stack triangulation of one y-monotone face given in CCW order.
void triangulate_monotone(std::span<const Point> v, const std::vector<Index>& face,
                          std::vector<std::array<Index, 3>>& out) {
  const std::size_t m = face.size();
  if (m == 3) {
    emit(v, out, face[0], face[1], face[2]);
    return;
  }
  std::size_t top = 0, bottom = 0;
  for (std::size_t k = 1; k < m; ++k) {
    if (above(v[face[k]], v[face[top]])) top = k;
    if (above(v[face[bottom]], v[face[k]])) bottom = k;
  }
  // Going forward (CCW) from the top descends the left chain.
  std::map<Index, bool> on_left;
  for (std::size_t k = (top + 1) % m; k != bottom; k = (k + 1) % m) on_left[face[k]] = true;
  for (std::size_t k = (bottom + 1) % m; k != top; k = (k + 1) % m) on_left[face[k]] = false;
  on_left[face[top]] = true;
  on_left[face[bottom]] = false;

  std::vector<Index> u(face.begin(), face.end());
  std::sort(u.begin(), u.end(), [&](Index a, Index b) { return above(v[a], v[b]); });

  std::vector<Index> stack{u[0], u[1]};
  for (std::size_t j = 2; j + 1 < m; ++j) {
    const Index cur = u[j];
    if (on_left[cur] != on_left[stack.back()]) {
      for (std::size_t k = 0; k + 1 < stack.size(); ++k) emit(v, out, cur, stack[k], stack[k + 1]);
      stack = {u[j - 1], cur};
    } else {
      Index last = stack.back();
      stack.pop_back();
      while (!stack.empty()) {
        const Index t = stack.back();
        const bool ear = on_left[cur] ? orientation(v[t], v[last], v[cur]) == Orientation::CCW
                                      : orientation(v[cur], v[last], v[t]) == Orientation::CCW;
        if (!ear) break;
        emit(v, out, cur, last, t);
        last = t;
        stack.pop_back();
      }
      stack.push_back(last);
      stack.push_back(cur);
    }
  }
  for (std::size_t k = 0; k + 1 < stack.size(); ++k) emit(v, out, u[m - 1], stack[k], stack[k + 1]);
}

}  // namespace

std::vector<std::array<std::uint32_t, 3>> triangulate(const SimplePolygon& polygon) {
  const auto v = polygon.vertices();
  const auto faces = monotone_pieces(v, monotone_diagonals(v));
  std::vector<std::array<Index, 3>> out;
  out.reserve(v.size() - 2);
  for (const auto& face : faces) triangulate_monotone(v, face, out);
  if (out.size() != v.size() - 2)
    throw Error(ErrorCode::InternalError, "triangulation produced a wrong triangle count");
  return out;
}

}  // namespace pairvis
