#include "gsp4/errors.hpp"

namespace gsp4 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularInput: return "SingularInput";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::OddPowerOfRoot: return "OddPowerOfRoot";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAnInteger: return "NotAnInteger";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::NotInFiberProduct: return "NotInFiberProduct";
    case Errc::IdentityFailed: return "IdentityFailed";
    case Errc::NotDominant: return "NotDominant";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::ParityViolated: return "ParityViolated";
    case Errc::InconsistentWeights: return "InconsistentWeights";
    case Errc::NotInDMinus: return "NotInDMinus";
    case Errc::CriticalityViolated: return "CriticalityViolated";
    case Errc::NonHalfIntegerS: return "NonHalfIntegerS";
    case Errc::FactorAbsent: return "FactorAbsent";
    case Errc::LevelTooSmall: return "LevelTooSmall";
    case Errc::PoleAt: return "PoleAt";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::AllSamplesAtPoles: return "AllSamplesAtPoles";
    case Errc::RegionMismatch: return "RegionMismatch";
    case Errc::PrecisionOutOfRange: return "PrecisionOutOfRange";
    case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
  }
  return "Unknown";
}

}  // namespace gsp4
