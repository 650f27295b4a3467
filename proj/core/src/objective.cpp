#include "pairvis/objective.hpp"

namespace pairvis {

std::string to_string(Objective::Kind kind) {
  switch (kind) {
    case Objective::Kind::MinMax: return "minmax";
    case Objective::Kind::MinSum: return "minsum";
    case Objective::Kind::WeightedMinMax: return "wminmax";
    case Objective::Kind::OffsetMinMax: return "offset";
  }
  return "unknown";
}

}  // namespace pairvis
