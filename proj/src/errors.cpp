#include "intangle/errors.hpp"

namespace intangle {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::DegreeExceeded: return "DegreeExceeded";
    case ErrorKind::BadCycleSyntax: return "BadCycleSyntax";
    case ErrorKind::UnsupportedParams: return "UnsupportedParams";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::BaseNotContained: return "BaseNotContained";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::NotBiprojection: return "NotBiprojection";
    case ErrorKind::NotProjection: return "NotProjection";
    case ErrorKind::AngleUndefined: return "AngleUndefined";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::NotMinimalPair: return "NotMinimalPair";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::IndexTooSmall: return "IndexTooSmall";
    case ErrorKind::NotCommutingSquare: return "NotCommutingSquare";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidTraceData: return "InvalidTraceData";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace intangle
