#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobsig {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponent or length arithmetic would leave the supported range.
struct overflow_error : error {
    using error::error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

/// Problem-file syntax or semantic error with source position.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t line, std::size_t col)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line(line),
          col(col) {}

    std::size_t line;
    std::size_t col;
};

}  // namespace frobsig
