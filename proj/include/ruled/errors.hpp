#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

enum class ErrorKind {
  OrderViolation,
  NonTermination,
  IndexOutOfRange,
  InvalidSlope,
  ShiftOutOfRange,
  PrecisionExhausted,
  RootUnavailable,
  ModelMismatch,
  DegreeCapExceeded,
  UnsupportedSupport,
  LiftRequired,
  DivisionImpossible,
  PreconditionViolated,
  ConsistencyFailure,
  ParseError,
  InvalidInput,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, std::string(error_kind_name(k)) + ": " + msg);
}

}  // namespace ruled
