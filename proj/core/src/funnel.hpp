#pragma once

// Funnel of shortest paths from an apex to the two ends of a triangulation
// diagonal. Stored as a window [lo, hi) of a flat buffer so that the two
// possible splits at a new vertex can be applied and undone in O(1).

#include <cstdint>
#include <vector>

#include "pairvis/geometry.hpp"

namespace pairvis::detail {

struct FunnelNode {
  Point p;
  std::uint32_t key;  // caller-defined handle
};

class Funnel {
 public:
  struct Undo {
    std::size_t lo, hi, apex, pos;
    FunnelNode saved;
  };

  // Room for `steps` splits in either direction.
  explicit Funnel(std::size_t steps) : buf_(2 * steps + 16), lo_(steps + 8), hi_(steps + 8), apex_(steps + 8) {}

  // Sequence from the a-end to the b-end; `apex` indexes into `nodes`.
  void reset(const std::vector<FunnelNode>& nodes, std::size_t apex) {
    const std::size_t mid = buf_.size() / 2 - nodes.size() / 2;
    for (std::size_t i = 0; i < nodes.size(); ++i) buf_[mid + i] = nodes[i];
    lo_ = mid;
    hi_ = mid + nodes.size();
    apex_ = mid + apex;
  }

  const FunnelNode& at(std::size_t pos) const { return buf_[pos]; }
  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }
  std::size_t apex() const { return apex_; }

  // Position of the funnel node that the geodesic to c passes last. Ties
  // (c collinear with a chain edge) resolve toward the apex.
  std::size_t attach(Point c) const {
    // a-chain: first j in [lo, apex) with c strictly left of f[j+1] -> f[j].
    std::size_t l = lo_, r = apex_;
    while (l < r) {
      const std::size_t m = l + (r - l) / 2;
      if (orientation(buf_[m + 1].p, buf_[m].p, c) == Orientation::CCW)
        r = m;
      else
        l = m + 1;
    }
    if (l < apex_) return l;
    // b-chain: last j in (apex, hi) with c strictly right of f[j-1] -> f[j].
    l = apex_ + 1;
    r = hi_;
    while (l < r) {
      const std::size_t m = l + (r - l) / 2;
      if (orientation(buf_[m - 1].p, buf_[m].p, c) == Orientation::CW)
        l = m + 1;
      else
        r = m;
    }
    return l > apex_ + 1 ? l - 1 : apex_;
  }

  // Keep the funnel of (a, c): [lo .. j, c].
  Undo keep_left(std::size_t j, FunnelNode c) {
    Undo u{lo_, hi_, apex_, j + 1, buf_[j + 1]};
    buf_[j + 1] = c;
    hi_ = j + 2;
    if (j < apex_) apex_ = j;
    return u;
  }

  // Keep the funnel of (c, b): [c, j .. hi).
  Undo keep_right(std::size_t j, FunnelNode c) {
    Undo u{lo_, hi_, apex_, j - 1, buf_[j - 1]};
    buf_[j - 1] = c;
    lo_ = j - 1;
    if (j > apex_) apex_ = j;
    return u;
  }

  void undo(const Undo& u) {
    buf_[u.pos] = u.saved;
    lo_ = u.lo;
    hi_ = u.hi;
    apex_ = u.apex;
  }

 private:
  std::vector<FunnelNode> buf_;
  std::size_t lo_, hi_, apex_;
};

}  // namespace pairvis::detail
