#pragma once

#include <stdexcept>
#include <string>

namespace nagata {

/// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematically meaningless request: zero where a nonzero element is
/// required, a unit where an irreducible is required, division by zero.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds the degree or coefficient bounds of the exact engines.
class LimitError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The caller broke the stated hypothesis of a conditional algorithm
/// (an equation that does not hold, avoidance that fails, a submonoid
/// that is not prime-or-unit).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An engine or oracle returned something inconsistent with its contract.
/// Raised from inside verified algorithms; never the caller's fault.
class OracleViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace nagata
