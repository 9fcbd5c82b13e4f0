#pragma once

#include <stdexcept>
#include <string>

namespace delliptic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// An argument violated an operation's precondition (d out of range,
/// profile size mismatch, under-determined fit, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A linear system had no unique solution.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// A linear system had no solution at all.
class InconsistentSystem : public Error {
public:
    using Error::Error;
};

/// A pairing needed an intersection number that is not in the registry.
class UnlistedIntersection : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class CrossCheckFailure : public Error {
public:
    CrossCheckFailure(std::string check, const std::string& detail)
        : Error(check + ": " + detail), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

} // namespace delliptic
