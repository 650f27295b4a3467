#pragma once

#include <algorithm>
#include <string>

namespace pairvis {

/// How the two travel distances are combined.
struct Objective {
  enum class Kind { MinMax, MinSum, WeightedMinMax, OffsetMinMax };

  Kind kind = Kind::MinMax;
  double lambda = 0.5;  // WeightedMinMax: max(lambda * ds, (1 - lambda) * dt)
  double alpha = 0.0;   // OffsetMinMax: max(alpha + ds, beta + dt)
  double beta = 0.0;

  static Objective min_max() { return {}; }
  static Objective min_sum() { return {Kind::MinSum}; }
  static Objective weighted(double lambda) { return {Kind::WeightedMinMax, lambda}; }
  static Objective offset(double alpha, double beta) { return {Kind::OffsetMinMax, 0.5, alpha, beta}; }

  double combine(double ds, double dt) const {
    switch (kind) {
      case Kind::MinMax: return std::max(ds, dt);
      case Kind::MinSum: return ds + dt;
      case Kind::WeightedMinMax: return std::max(lambda * ds, (1.0 - lambda) * dt);
      case Kind::OffsetMinMax: return std::max(alpha + ds, beta + dt);
    }
    return 0.0;
  }

  /// Value of the objective when no travel is needed.
  double at_zero() const { return combine(0.0, 0.0); }

  bool is_max_type() const { return kind != Kind::MinSum; }

  bool operator==(const Objective&) const = default;
};

std::string to_string(Objective::Kind kind);

}  // namespace pairvis
