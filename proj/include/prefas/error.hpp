#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefas {

//! Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Malformed program text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
        , line_(line)
        , column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

//! A program violates a structural invariant (duplicate label, duplicate rule, unknown label).
class ProgramError : public Error {
public:
    using Error::Error;
};

//! The closure of a preference relation is not asymmetric.
class PreferenceCycleError : public Error {
public:
    PreferenceCycleError(std::size_t rule, const std::string& message) : Error(message), rule_(rule) {}

    //! Index of a rule on the cycle.
    [[nodiscard]] std::size_t rule() const noexcept { return rule_; }

private:
    std::size_t rule_;
};

//! An exhaustive search would exceed the configured enumeration bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

//! An operation was called with an argument outside of its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace prefas
