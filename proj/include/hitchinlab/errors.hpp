#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

// Mathematical rejections (CLI exit code 2), as opposed to I/O or usage errors.
enum class Err {
  DimensionMismatch,
  DegreeZeroInterior,
  NotStable,
  NoRealRoot,
  Incompatible,
  NotNormalized,
  NullNormal,
  Degenerate,
  NotCoclosed,
  WrongOrbit,
  NotClosed,
  SingularHit,
  DriftExceeded,
  NotNearlyHalfFlat,
  NewtonDiverged,
  NotCocalibrated,
  NotNearlyKaehler,
  WrongNormalForm,
  OutsideInterval,
  IllConditioned,
  DegenerateRestriction,
  NotADiffeo,
  DegenerateMetric,
  ExactSqrtUnavailable,
};

const char* err_name(Err e);

class MathError : public std::runtime_error {
 public:
  MathError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw MathError(code, what); }

}  // namespace hlab
