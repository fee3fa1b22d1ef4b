#include "eisen/arith/errors.hpp"

namespace eisen {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PDoesNotDivide: return "PDoesNotDivide";
    case ErrorCode::SmallPrime: return "SmallPrime";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotRelativeSpace: return "NotRelativeSpace";
    case ErrorCode::DenominatorSharesFactor: return "DenominatorSharesFactor";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::RootIdentityFails: return "RootIdentityFails";
    case ErrorCode::InconsistentWitnesses: return "InconsistentWitnesses";
    case ErrorCode::NonintegralDivisor: return "NonintegralDivisor";
    case ErrorCode::ExponentMismatch: return "ExponentMismatch";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::NotOverInfinity: return "NotOverInfinity";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::WitnessDisagreement: return "WitnessDisagreement";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CacheError: return "CacheError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + " [" + module + "]: " + detail),
      code_(code),
      module_(std::move(module)) {}

}  // namespace eisen
