#include "ruled/errors.hpp"

namespace ruled {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidSlope: return "InvalidSlope";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::RootUnavailable: return "RootUnavailable";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::LiftRequired: return "LiftRequired";
    case ErrorKind::DivisionImpossible: return "DivisionImpossible";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace ruled
