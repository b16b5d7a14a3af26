#pragma once

#include <string>

#include "piexp/input.hpp"

namespace piexp {

// Grammar (whitespace-insensitive):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' INT))*
//   factor := INT ['^' sexp]
//           | 'pi' '(' INT ')' ['^' sexp]
//           | 'zeta' '(' INT ')' ['^' sexp]
//           | 'dworkpi' ['^' sexp]
//           | ('T'|'t') ['^' INT]
//   sexp   := ['-'] INT
// Errors carry the byte offset of the offending token. The constant term must
// vanish and at least one T-term must appear (possibly with coefficient 0,
// which declares padding: "T + 0*T^2" has declared degree 2).
InputPolynomial parse_polynomial(const std::string& text, long p);

// Same term language without T: the expansion point for `--at`.
CoeffExpr parse_coefficient(const std::string& text);

// "a" or "a/b" with optional sign; used for --generic-logr.
Rat parse_rational(const std::string& text);

}  // namespace piexp
