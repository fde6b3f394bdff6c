#include "fgc/error.hpp"

namespace fgc {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::UnpairedSide: return "UnpairedSide";
    case ErrorCode::EulerMismatch: return "EulerMismatch";
    case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorCode::SelfGluedEdge: return "SelfGluedEdge";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::NotConcurrent: return "NotConcurrent";
    case ErrorCode::CoincidentBasePoints: return "CoincidentBasePoints";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::InconsistentPath: return "InconsistentPath";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::DepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorCode::PatchOverflow: return "PatchOverflow";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::AssumptionIViolated: return "AssumptionIViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace fgc
