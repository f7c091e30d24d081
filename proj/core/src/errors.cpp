#include "hecke/errors.hpp"

namespace hecke {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OrderUnavailable: return "OrderUnavailable";
    case ErrorCode::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInLambdaB: return "NotInLambdaB";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::SingularChangeOfBasis: return "SingularChangeOfBasis";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::TableIncomplete: return "TableIncomplete";
    case ErrorCode::CyclicityNotEstablished: return "CyclicityNotEstablished";
    case ErrorCode::IncompleteSimpleList: return "IncompleteSimpleList";
    case ErrorCode::GenericNotSemisimple: return "GenericNotSemisimple";
    case ErrorCode::LatticeFailure: return "LatticeFailure";
    case ErrorCode::RecursionDepthExceeded: return "RecursionDepthExceeded";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace hecke
