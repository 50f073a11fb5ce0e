#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph structure: disconnected, dangling references, mismatched models.
class StructuralError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A verifier was asked about a graph outside the genus range it covers.
class ScopeError : public Error {
public:
    using Error::Error;
};

// An enumeration or search budget would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Invalid fixture family parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, std::string message)
        : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(std::move(message)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace tropical
