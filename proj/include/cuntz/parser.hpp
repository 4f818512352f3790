#pragma once

// Expression grammar (a superset of the documented one):
//
//   expr    := ["-"|"+"] term { ("+"|"-") term }
//   term    := atom { "*" atom }
//   atom    := scalar | factor
//   factor  := gen ["'"] | "(" expr ")" ["'"] | "I"
//   gen     := "e(" int { "," int } ";" int ")"
//   scalar  := number ["i"] | "i" | "zeta(" int ")^" int
//   number  := digits ["/" digits] | decimal [exponent]
//
// so `(1-2i)` and `(1/2 + zeta(8)^3)`, which the printer emits, read back
// as parenthesized scalar sums. Decimals produce float scalars.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/morphisms.hpp"

namespace cuntz {

/// Throws ParseError with a byte offset and the expected-token set.
AlgebraElement parse_expression(const SystemSpec& spec, std::string_view text);

/// `e(1,1;4)`
BasisMonomial parse_monomial(const SystemSpec& spec, std::string_view text);

/// `(1,0)` or `1,0`
SemigroupElement parse_semigroup(const SystemSpec& spec, std::string_view text);

/// Comma-separated scalars, e.g. `i,1` or `zeta(8)^1, 1`.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Lines `(a,i) = <expression>` with 1-based a; `#` starts a comment.
/// Expressions are read against `target`.
std::map<GeneratorKey, AlgebraElement> parse_assignment(const SystemSpec& target, std::string_view text);

/// Inverse of parse_assignment.
std::string format_assignment(const std::map<GeneratorKey, AlgebraElement>& images);

}  // namespace cuntz
