#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vafw {

enum class ErrorCode {
  EmptyValueSet,
  UnknownArgumentInAttack,
  UnmappedArgumentValue,
  DuplicateArgumentId,
  InvalidIdentifier,
  UnknownArgument,
  UnknownValue,
  InvalidOrder,
  CyclicPreference,
  InstanceTooLarge,
  TooManyValues,
  MonochromaticCyclePresent,
  NotDichromatic,
  NotASimpleCycle,
  StatusAlreadyDesired,
  InvalidSpec,
  UnknownFixture,
  SyntaxError,
  SchemaError,
  EmptyHistory,
  IoError,
};

/// Stable machine-readable name, e.g. "UnknownArgument".
std::string_view error_code_name(ErrorCode code);

/// Every engine failure is reported through this type. `details()` holds one
/// line per violated invariant when several are detected at once.
class VafError : public std::runtime_error {
 public:
  VafError(ErrorCode code, const std::string& message,
           std::vector<std::string> details = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace vafw
