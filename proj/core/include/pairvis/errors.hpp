#pragma once

#include <stdexcept>
#include <string>

namespace pairvis {

enum class ErrorCode {
  InvalidInput,
  TooFewVertices,
  NotSimple,
  OutsidePolygon,
  DegenerateInput,
  EmptyInterval,
  VersionMismatch,
  InternalError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pairvis
