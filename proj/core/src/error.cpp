#include "ncrainbow/error.hpp"

namespace ncrainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedTable: return "MalformedTable";
    case ErrorCode::kNoIdentity: return "NoIdentity";
    case ErrorCode::kNoInverse: return "NoInverse";
    case ErrorCode::kNotLatinSquare: return "NotLatinSquare";
    case ErrorCode::kAssociativityViolation: return "AssociativityViolation";
    case ErrorCode::kInvalidTwist: return "InvalidTwist";
    case ErrorCode::kNotAutomorphism: return "NotAutomorphism";
    case ErrorCode::kNotHomomorphism: return "NotHomomorphism";
    case ErrorCode::kNotCentral: return "NotCentral";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kAbelianGroup: return "AbelianGroup";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kPreconditionKappa: return "PreconditionKappa";
    case ErrorCode::kColoringRejected: return "ColoringRejected";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ncrainbow
