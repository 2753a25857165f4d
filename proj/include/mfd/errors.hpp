#pragma once

#include <stdexcept>
#include <string>

namespace mfd {

enum class Errc {
    // field
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    SpecMismatch,
    DivisionByZero,
    UnsupportedFieldSize,
    // ferrers
    NotNondecreasing,
    ColumnExceedsOrder,
    NotTopRightJustified,
    OutOfRange,
    NotStrictlyPMonotone,
    // skewflag
    NotPrimePowerOrder,
    OrderMismatch,
    CoordinateNotInSubfield,
    // codes
    NotPMonotone,
    OrderNotPowerOfChar,
    InvalidBasis,
    NotStrictlyMonotone,
    NotInitiallyConvex,
    NotMdsConstructible,
    NotSubdiagram,
    UnsupportedDiagramClass,
    // verify
    CapExceeded,
    NoNonzeroCodewords,
    // cli / io
    ParseError,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::SpecMismatch: return "SpecMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::UnsupportedFieldSize: return "UnsupportedFieldSize";
        case Errc::NotNondecreasing: return "NotNondecreasing";
        case Errc::ColumnExceedsOrder: return "ColumnExceedsOrder";
        case Errc::NotTopRightJustified: return "NotTopRightJustified";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotStrictlyPMonotone: return "NotStrictlyPMonotone";
        case Errc::NotPrimePowerOrder: return "NotPrimePowerOrder";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::CoordinateNotInSubfield: return "CoordinateNotInSubfield";
        case Errc::NotPMonotone: return "NotPMonotone";
        case Errc::OrderNotPowerOfChar: return "OrderNotPowerOfChar";
        case Errc::InvalidBasis: return "InvalidBasis";
        case Errc::NotStrictlyMonotone: return "NotStrictlyMonotone";
        case Errc::NotInitiallyConvex: return "NotInitiallyConvex";
        case Errc::NotMdsConstructible: return "NotMdsConstructible";
        case Errc::NotSubdiagram: return "NotSubdiagram";
        case Errc::UnsupportedDiagramClass: return "UnsupportedDiagramClass";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::NoNonzeroCodewords: return "NoNonzeroCodewords";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace mfd
