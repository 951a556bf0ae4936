#pragma once

/// @file error.hpp
/// @brief The single exception type thrown by the library, tagged by kind.

#include <stdexcept>
#include <string>
#include <string_view>

namespace convex {

enum class ErrorKind {
    OutOfRange,
    ZeroDenominator,
    DimensionMismatch,
    ArityMismatch,
    InvalidDistribution,
    NotBijective,
    NegativeScale,
    ZeroPoint,
    NotDominated,
    DegenerateInterval,
    ParseError,
    UnknownInstance,
    UnknownFunction,
};

constexpr std::string_view kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::InvalidDistribution: return "InvalidDistribution";
        case ErrorKind::NotBijective: return "NotBijective";
        case ErrorKind::NegativeScale: return "NegativeScale";
        case ErrorKind::ZeroPoint: return "ZeroPoint";
        case ErrorKind::NotDominated: return "NotDominated";
        case ErrorKind::DegenerateInterval: return "DegenerateInterval";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownInstance: return "UnknownInstance";
        case ErrorKind::UnknownFunction: return "UnknownFunction";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace convex
