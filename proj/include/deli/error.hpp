#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deli {

/// A value lies outside the domain an operation is defined on
/// (parameter outside [0,1] for a segment, length of an infinite line, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inconsistent or incomplete parameters, e.g. a Version 2 run without profiles.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace deli
