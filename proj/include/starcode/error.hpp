#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starcode {

/// Error categories raised by the library. Decoding failure and
/// insufficient coalitions are ordinary values, not errors.
enum class Errc {
    InvalidArgument,
    NotPrime,
    OrderTooLarge,
    DivisionByZero,
    ContextMismatch,
    ShapeMismatch,
    LengthMismatch,
    TooLargeToEnumerate,
    ZeroCode,
    DegenerateSquare,
    NotAnExtension,
    TooManyPoints,
    DuplicatePoints,
    DuplicateExponents,
    DuplicateProjectivePoints,
    BadDegree,
    GuaranteeViolation,
    RadiusTooLarge,
    EmptyLocator,
    SecretCoordinateDead,
    InconsistentShares,
    CodeMismatch,
    DependentColumns,
    ParseError,
};

inline std::string_view errc_name(Errc e) {
    switch (e) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::DegenerateSquare: return "DegenerateSquare";
        case Errc::NotAnExtension: return "NotAnExtension";
        case Errc::TooManyPoints: return "TooManyPoints";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::DuplicateExponents: return "DuplicateExponents";
        case Errc::DuplicateProjectivePoints: return "DuplicateProjectivePoints";
        case Errc::BadDegree: return "BadDegree";
        case Errc::GuaranteeViolation: return "GuaranteeViolation";
        case Errc::RadiusTooLarge: return "RadiusTooLarge";
        case Errc::EmptyLocator: return "EmptyLocator";
        case Errc::SecretCoordinateDead: return "SecretCoordinateDead";
        case Errc::InconsistentShares: return "InconsistentShares";
        case Errc::CodeMismatch: return "CodeMismatch";
        case Errc::DependentColumns: return "DependentColumns";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace starcode
