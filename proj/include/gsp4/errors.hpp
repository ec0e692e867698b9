#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp4 {

/// Error conditions raised by the computational modules.
enum class Errc {
  DenominatorVanishes,
  DimensionMismatch,
  SingularInput,
  ExponentOverflow,
  OddPowerOfRoot,
  ParseError,
  NotAnInteger,
  NotSymplectic,
  NotInFiberProduct,
  IdentityFailed,
  NotDominant,
  WeightOutOfRange,
  ParityViolated,
  InconsistentWeights,
  NotInDMinus,
  CriticalityViolated,
  NonHalfIntegerS,
  FactorAbsent,
  LevelTooSmall,
  PoleAt,
  IndexOutOfRange,
  AllSamplesAtPoles,
  RegionMismatch,
  PrecisionOutOfRange,
  QuadratureNotConverged,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Violated precondition or mathematical domain restriction.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to reach its tolerance.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gsp4
