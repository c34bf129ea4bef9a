#include "lcalc/typing.hpp"

#include "lcalc/rewrite.hpp"

namespace lcalc {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::AbsHeadMissing: return "AbsHeadMissing";
    case FailureKind::MergeConflict: return "MergeConflict";
    case FailureKind::DecrementZero: return "DecrementZero";
    case FailureKind::ZeroDepthRemains: return "ZeroDepthRemains";
    case FailureKind::DupChildrenMissing: return "DupChildrenMissing";
  }
  return "?";
}

std::string TypeFailure::message() const {
  std::string out = to_string(kind);
  if (!subject.empty()) out += "(" + subject + ")";
  out += " in rule " + rule + " at " + path_to_string(path);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

const char* to_string(NormalizeFailure::Kind kind) {
  switch (kind) {
    case NormalizeFailure::Kind::FuelExhausted: return "FuelExhausted";
    case NormalizeFailure::Kind::PreservationViolation: return "PreservationViolation";
    case NormalizeFailure::Kind::LinearityLost: return "LinearityLost";
    case NormalizeFailure::Kind::ClosureRemains: return "ClosureRemains";
    case NormalizeFailure::Kind::NotClosedLinear: return "NotClosedLinear";
  }
  return "?";
}

}  // namespace lcalc
