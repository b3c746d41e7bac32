#pragma once

#include <stdexcept>
#include <string>

namespace fskit {

/// Root of the library error hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A constructor invariant or operation precondition was violated.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two values live over different object universes.
class UniverseMismatchError : public Error {
public:
    using Error::Error;
};

/// Two values live over incompatible parameter sets.
class ParameterMismatchError : public Error {
public:
    using Error::Error;
};

/// Two fuzzy reals live on different alpha grids.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Intersection of fuzzy soft sets with disjoint parameter sets.
class EmptyParameterIntersectionError : public Error {
public:
    using Error::Error;
};

/// Division by a fuzzy real whose cut touches or contains zero.
class DivisionByIntervalContainingZeroError : public Error {
public:
    using Error::Error;
};

/// Contraction factor outside (0, 1).
class InvalidContractionError : public Error {
public:
    using Error::Error;
};

/// Iterates empirically violated the declared Lipschitz bound.
class ContractionViolatedError : public Error {
public:
    using Error::Error;
};

/// Two points with equal support where distinct supports are required.
class NotDistinctError : public Error {
public:
    using Error::Error;
};

/// Malformed input document or expression.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    explicit ParseError(const std::string& message) : Error(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

}  // namespace fskit
