#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixcay {

using Element = std::uint32_t;

enum class ErrorCode {
  NotAGroup,
  NoIdentity,
  OrderLimitExceeded,
  UnknownFamily,
  ParseError,
  BadDivisor,
  FilterUndefined,
  IdentityElement,
  NotInGamma4,
  ContainsIdentity,
  NotAdmissible,
  BadOrder,
  DegenerateSplitFailure,
  ValidationFailure,
  NotClassFunction,
  NonNormalSet,
  NotSymmetric,
  NotSkewSymmetric,
  NotHermitian,
  NoConvergence,
  UnknownElement,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` carries the elements
/// that demonstrate the failure when there are any (e.g. a non-associative
/// triple for NotAGroup).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Element> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

}  // namespace mixcay
