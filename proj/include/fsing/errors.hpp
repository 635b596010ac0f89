#ifndef FSING_ERRORS_HPP
#define FSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsing {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different fields (or rings).
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

/// An exponent or degree left the representable 64-bit range.
class ExponentOverflow : public Error {
public:
    explicit ExponentOverflow(const std::string& what) : Error(what) {}
};

/// The zero polynomial has no degree.
class ZeroPolynomialDegree : public Error {
public:
    explicit ZeroPolynomialDegree(const std::string& what) : Error(what) {}
};

/// A configured resource budget was exceeded; the computation was
/// aborted rather than allowed to return a possibly wrong answer.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A machine-checked identity that the input was supposed to satisfy
/// failed (e.g. a sequence declared regular is not).
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(what) {}
};

} // namespace fsing

#endif
