#include "mixcay/error.hpp"

namespace mixcay {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadDivisor: return "BadDivisor";
    case ErrorCode::FilterUndefined: return "FilterUndefined";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::NotInGamma4: return "NotInGamma4";
    case ErrorCode::ContainsIdentity: return "ContainsIdentity";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DegenerateSplitFailure: return "DegenerateSplitFailure";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::NotClassFunction: return "NotClassFunction";
    case ErrorCode::NonNormalSet: return "NonNormalSet";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnknownElement: return "UnknownElement";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Element> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace mixcay
