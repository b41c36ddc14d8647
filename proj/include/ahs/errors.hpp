#pragma once

#include <stdexcept>
#include <string>

namespace ahs {

enum class ErrorKind {
    NotDivisible,
    DenominatorVanishes,
    PoleAtOne,
    VerificationFailed,
    NonIntegerCoefficients,
    ScaleExceeded,
    NotNilpotent,
    FieldDependentDimension,
    IntegralityViolation,
    PathDisagreement,
    TriangularityViolation,
    WindowInstability,
    NotHomogeneous,
    InvalidArgument,
    ParseError,
    UnknownAtomForAlgebra,
};

const char* errorKindName(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(errorKindName(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace ahs
