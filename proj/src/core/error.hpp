#ifndef EDSFN_CORE_ERROR_HPP
#define EDSFN_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edsfn {

enum class ErrorCode {
    ZeroInput,
    NonUniformPlace,
    IncoherentPlaces,
    NotExact,
    ParseError,
    SingularCurve,
    BadCharacteristic,
    NotMinimal,
    InconsistentValuations,
    EverywhereGoodReduction,
    PointNotOnCurve,
    ZeroSection,
    ParityViolation,
    TorsionPoint,
    InvalidComponent,
    RangeViolation,
    NoSolution,
    NegativeHasseValuation,
    SumMismatch,
    RecursionViolation,
    ConstraintViolation,
    BoundViolation,
    IdentityViolation,
    Overflow,
    NoCrossover,
    WildWithoutFiniteField,
    NotOrdinary,
    InvalidArgument,
    Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// True for codes that signal a violated standing assumption (wrong
// characteristic, smooth fibration, torsion point, ...) rather than a bug
// or malformed input.
bool is_assumption_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace edsfn

#endif
