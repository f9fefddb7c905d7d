#pragma once

#include <stdexcept>
#include <string>

namespace wythoff {

enum class ErrorCode {
  InvalidArgument,
  NotInvolution,
  RelationViolated,
  BudgetExceeded,
  SeedOnMirror,
  UnknownPolyhedron,
  LocallyInfinite,
  DegenerateBlend,
  NoAdmissibleVertex,
  PlacementViolation,
  ValidationFailed,
  TooFewVertices,
  OpenVertexFigure,
  NonTransitiveSymbol,
  IOError,
  EmptyMesh,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wythoff
