#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z2z4 {

/// Operands do not share the same (alpha, beta) shape, or a shape exceeds
/// the supported capacity.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed vector literal or code file. `line()` is 1-based, 0 when the
/// error is not tied to a file line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An enumeration would exceed the configured codeword cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A type quintuple that is internally inconsistent.
class InvalidType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Construction parameters outside their admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace z2z4
