#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad parameter, id out of range, refused budget).
/// The CLI maps these to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input data could not be read or understood. The CLI maps these to exit code 1.
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed content in a text input; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : DataError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace domlab
