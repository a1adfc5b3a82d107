#ifndef GORLINK_ERRORS_HPP
#define GORLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gorlink {

/// Base class for all errors raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live in different rings (or over different fields).
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

/// A stated precondition does not hold for the given inputs.
class PrecondFailed : public Error {
public:
    explicit PrecondFailed(const std::string& msg) : Error(msg) {}
};

/// A linear system A*X = B over the ring has no solution; usually this
/// signals a violated exactness hypothesis upstream.
class NoLift : public Error {
public:
    explicit NoLift(const std::string& msg) : Error(msg) {}
};

/// An element expected to be regular modulo an ideal is a zerodivisor.
class NotNZD : public Error {
public:
    explicit NotNZD(const std::string& msg) : Error(msg) {}
};

/// The randomized search for a suitable element ran out of trials.
class SearchExhausted : public Error {
public:
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

/// The constructed ideal dropped grade, i.e. the hypotheses of the
/// construction were violated.
class GradeDrop : public Error {
public:
    explicit GradeDrop(const std::string& msg) : Error(msg) {}
};

/// A chain of maps failed d*d = 0; an implementation bug trap.
class ComplexCheckFailed : public Error {
public:
    explicit ComplexCheckFailed(const std::string& msg) : Error(msg) {}
};

/// The assembled resolution resolves a different ideal than expected.
class IdealMismatch : public Error {
public:
    explicit IdealMismatch(const std::string& msg) : Error(msg) {}
};

/// Invariant violation inside the kernel itself.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

/// Input language syntax or semantic error, with location info.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

} // namespace gorlink

#endif
