#include "vafw/error.hpp"

namespace vafw {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyValueSet: return "EmptyValueSet";
    case ErrorCode::UnknownArgumentInAttack: return "UnknownArgumentInAttack";
    case ErrorCode::UnmappedArgumentValue: return "UnmappedArgumentValue";
    case ErrorCode::DuplicateArgumentId: return "DuplicateArgumentId";
    case ErrorCode::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::CyclicPreference: return "CyclicPreference";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::TooManyValues: return "TooManyValues";
    case ErrorCode::MonochromaticCyclePresent: return "MonochromaticCyclePresent";
    case ErrorCode::NotDichromatic: return "NotDichromatic";
    case ErrorCode::NotASimpleCycle: return "NotASimpleCycle";
    case ErrorCode::StatusAlreadyDesired: return "StatusAlreadyDesired";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::EmptyHistory: return "EmptyHistory";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

VafError::VafError(ErrorCode code, const std::string& message,
                   std::vector<std::string> details)
    : std::runtime_error(message), code_(code), details_(std::move(details)) {}

}  // namespace vafw
