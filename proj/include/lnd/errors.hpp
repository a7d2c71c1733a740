#ifndef LND_ERRORS_HPP
#define LND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lnd {

/// Base class for all domain errors. `code()` is the stable machine-readable
/// identifier used by the CLI's error objects and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& message)
        : Error("ring_mismatch", message) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("invalid_argument", message) {}
};

/// An x1-slice mixes distinct y1 exponents; signals a violated homogeneity
/// condition upstream.
class MixedY1PowersError : public Error {
public:
    explicit MixedY1PowersError(const std::string& message)
        : Error("mixed_y1_powers", message) {}
};

class ContainsYLastError : public Error {
public:
    explicit ContainsYLastError(const std::string& message)
        : Error("contains_y_last", message) {}
};

class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& message)
        : Error("not_divisible", message) {}
};

class NotInKernelError : public Error {
public:
    explicit NotInKernelError(const std::string& message)
        : Error("not_in_kernel", message) {}
};

class UnsupportedVariablesError : public Error {
public:
    explicit UnsupportedVariablesError(const std::string& message)
        : Error("unsupported_variables", message) {}
};

class DecompositionFailedError : public Error {
public:
    explicit DecompositionFailedError(const std::string& message)
        : Error("decomposition_failed", message) {}
};

class NRequirementError : public Error {
public:
    explicit NRequirementError(const std::string& message)
        : Error("n_requirement", message) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& message)
        : Error("infeasible", message) {}
};

class IterationCapError : public Error {
public:
    explicit IterationCapError(const std::string& message)
        : Error("iteration_cap_exceeded", message) {}
};

/// A consistency assertion that must hold for every correct run has failed.
class InvariantViolationError : public Error {
public:
    explicit InvariantViolationError(const std::string& message)
        : Error("invariant_violation", message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error("parse_error", message) {}
};

} // namespace lnd

#endif
