#include "wythoff/errors.hpp"

namespace wythoff {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SeedOnMirror: return "SeedOnMirror";
    case ErrorCode::UnknownPolyhedron: return "UnknownPolyhedron";
    case ErrorCode::LocallyInfinite: return "LocallyInfinite";
    case ErrorCode::DegenerateBlend: return "DegenerateBlend";
    case ErrorCode::NoAdmissibleVertex: return "NoAdmissibleVertex";
    case ErrorCode::PlacementViolation: return "PlacementViolation";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::OpenVertexFigure: return "OpenVertexFigure";
    case ErrorCode::NonTransitiveSymbol: return "NonTransitiveSymbol";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::EmptyMesh: return "EmptyMesh";
  }
  return "Unknown";
}

}  // namespace wythoff
