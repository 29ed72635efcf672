#ifndef KGAP_ERRORS_HPP
#define KGAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kgap {

/// A documented precondition of an operation does not hold (exit code 2).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A size, time or branching budget was exceeded (exit code 3).
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input, e.g. a bad graph6 line (exit code 4).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; always indicates a defect (exit code 5).
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kgap

#endif
