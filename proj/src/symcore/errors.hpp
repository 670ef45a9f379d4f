#pragma once

#include <stdexcept>
#include <string>

namespace kontact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the expression/chart parsers; carries a byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Two values from different charts were combined.
struct ChartMismatch : Error {
    using Error::Error;
};

/// Precondition violation that is not a chart mismatch (bad index, singular
/// frame, invalid circle point, ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace kontact
