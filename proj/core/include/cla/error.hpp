#pragma once

#include <stdexcept>
#include <string>

namespace cla {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomial expressions, fixture files, words).
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A precondition of an operation was violated (division by zero,
/// point not on curve, divisor not semi-reduced, ...).
struct domain_error : error {
    using error::error;
};

} // namespace cla
