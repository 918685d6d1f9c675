#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crosscomp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (bad arguments, mixed batches).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exact solver refused an input beyond its configured ceiling.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// A construction produced something that violates its own postcondition.
/// Always a bug; the CLI maps it to exit code 3.
class InvariantFailure : public Error {
public:
    using Error::Error;
};

class DecodeError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind { Syntax, CountMismatch, InvariantViolation, UnknownTag, Unresolvable };

const char* to_string(ParseErrorKind kind);

/// Parse failure with a 1-based location. `column` is 0 when not meaningful.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace crosscomp
