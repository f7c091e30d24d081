#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  OrderUnavailable,
  PoleAtSpecialization,
  ParseError,
  ShapeMismatch,
  NotInLambdaB,
  InvalidParams,
  NotInvariant,
  SingularChangeOfBasis,
  IdentityFailed,
  RankDeficient,
  VerificationFailed,
  NotAutomorphism,
  WrongOrder,
  NotAbsolutelyIrreducible,
  NotSimple,
  TableIncomplete,
  CyclicityNotEstablished,
  IncompleteSimpleList,
  GenericNotSemisimple,
  LatticeFailure,
  RecursionDepthExceeded,
  LabelMismatch,
  UnknownObject,
  ConfigError,
};

const char* error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hecke
