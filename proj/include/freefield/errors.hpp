#ifndef FREEFIELD_ERRORS_HPP
#define FREEFIELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freefield {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (expression, word, rational, JSON).
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : Error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A configured work budget, bound, or iteration cap was exhausted.
/// The CLI maps this to exit code 3.
struct BudgetError : Error {
    using Error::Error;
};

/// Input is structurally valid but mathematically inadmissible
/// (inverse of zero, star of an improper series, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace freefield

#endif
