#pragma once

#include <stdexcept>
#include <string>

namespace fgc {

enum class ErrorCode {
  Ok = 0,
  Parse,
  Validation,
  UnpairedSide,
  EulerMismatch,
  VertexCountMismatch,
  SelfGluedEdge,
  DegenerateConfiguration,
  NotCollinear,
  NotConcurrent,
  CoincidentBasePoints,
  NonPositiveParameter,
  DegeneratePair,
  InconsistentPath,
  ZeroDeterminant,
  DepthLimitExceeded,
  PatchOverflow,
  TooFewVertices,
  AssumptionIViolated,
  InvalidArgument,
  Io,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fgc
