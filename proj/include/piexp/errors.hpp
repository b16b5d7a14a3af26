#pragma once

#include <stdexcept>
#include <string>

namespace piexp {

// Raised when a decision (valuation, inversion, min/max certification) cannot
// be made at the current working precision. Callers that own an escalation
// loop catch this, double the precision and retry.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed user input (polynomial text, points, rationals).
struct ParseError : std::runtime_error {
    size_t pos;  // byte offset into the offending text
    ParseError(const std::string& what, size_t pos_) : std::runtime_error(what), pos(pos_) {}
};

// Raised when a documented precondition or structural invariant is violated
// (zero polynomial, inversion of zero, Newton condition failure, ...).
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Process exit codes used by the CLI (and documented in the README).
enum ExitCode {
    EXIT_OK = 0,
    EXIT_PARSE = 2,
    EXIT_PRECISION = 3,
    EXIT_INVARIANT = 4,
};

}  // namespace piexp
