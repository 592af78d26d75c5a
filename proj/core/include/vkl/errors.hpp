#pragma once

#include <stdexcept>
#include <string>

namespace vkl {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by an exactly-zero scalar or ring element. Carries a printable
// rendering of the offending denominator.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& denominator)
        : Error("division by zero: denominator = " + denominator),
          denominator_(denominator) {}
    const std::string& denominator() const { return denominator_; }

private:
    std::string denominator_;
};

// Arithmetic between values living in different rings or with different
// algebra parameters.
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

// Element or matrix has no inverse (isotropic quaternion, singular matrix).
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

// Malformed textual input (polynomials, braid words, diagram files).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Algebra parameters outside the supported range (lambda, mu must be +1/-1).
class UnsupportedParams : public Error {
public:
    explicit UnsupportedParams(const std::string& what) : Error(what) {}
};

// Operation precondition violated (commuting pair fed to a non-commuting
// constructor, virtual letter in a classical-only check, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace vkl
