#pragma once

#include <stdexcept>
#include <string>

namespace eala {

// Numeric values are mirrored by the C API (eala_c.h); keep them in sync.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  IncompatibleFields = 2,
  NotSquare = 3,
  NotSemidefinite = 4,
  NotRootSystem = 5,
  NotAffine = 6,
  NotSymmetrizable = 7,
  UnstableBound = 8,
  InvalidAutomorphism = 9,
  InconsistentResidues = 10,
  CriterionFails = 11,
  NotApplicable = 12,
  OutOfWindow = 13,
  NotDiagonalizable = 14,
  Schema = 15,
  Internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace eala
