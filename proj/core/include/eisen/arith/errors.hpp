#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

enum class ErrorCode {
  NotPrime,
  PDoesNotDivide,
  SmallPrime,
  ZeroArgument,
  ModulusMismatch,
  NotRelativeSpace,
  DenominatorSharesFactor,
  LevelMismatch,
  BadPrime,
  PrecisionExhausted,
  NotInIdeal,
  RootIdentityFails,
  InconsistentWitnesses,
  NonintegralDivisor,
  ExponentMismatch,
  ZeroCoordinate,
  NotOverInfinity,
  LiftFailure,
  WitnessDisagreement,
  InvalidArgument,
  CacheError,
};

const char* error_name(ErrorCode code);

// Every library error carries the module it was raised in.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& module() const { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace eisen
