#include "pairvis/errors.hpp"

namespace pairvis {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::TooFewVertices: return "too_few_vertices";
    case ErrorCode::NotSimple: return "not_simple";
    case ErrorCode::OutsidePolygon: return "outside_polygon";
    case ErrorCode::DegenerateInput: return "degenerate_input";
    case ErrorCode::EmptyInterval: return "empty_interval";
    case ErrorCode::VersionMismatch: return "version_mismatch";
    case ErrorCode::InternalError: return "internal_error";
  }
  return "unknown";
}

}  // namespace pairvis
