#include "error.hpp"

namespace edsfn {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::NonUniformPlace: return "NonUniformPlace";
        case ErrorCode::IncoherentPlaces: return "IncoherentPlaces";
        case ErrorCode::NotExact: return "NotExact";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
        case ErrorCode::NotMinimal: return "NotMinimal";
        case ErrorCode::InconsistentValuations: return "InconsistentValuations";
        case ErrorCode::EverywhereGoodReduction: return "EverywhereGoodReduction";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::ZeroSection: return "ZeroSection";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::TorsionPoint: return "TorsionPoint";
        case ErrorCode::InvalidComponent: return "InvalidComponent";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::NegativeHasseValuation: return "NegativeHasseValuation";
        case ErrorCode::SumMismatch: return "SumMismatch";
        case ErrorCode::RecursionViolation: return "RecursionViolation";
        case ErrorCode::ConstraintViolation: return "ConstraintViolation";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NoCrossover: return "NoCrossover";
        case ErrorCode::WildWithoutFiniteField: return "WildWithoutFiniteField";
        case ErrorCode::NotOrdinary: return "NotOrdinary";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

bool is_assumption_violation(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::BadCharacteristic:
        case ErrorCode::EverywhereGoodReduction:
        case ErrorCode::TorsionPoint:
        case ErrorCode::WildWithoutFiniteField:
        case ErrorCode::NotOrdinary:
            return true;
        default:
            return false;
    }
}

}  // namespace edsfn
