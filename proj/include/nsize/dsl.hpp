#pragma once

#include "nsize/set_expr.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nsize {

struct SourceSpan {
    std::size_t begin = 0;  // byte offsets into the input
    std::size_t end = 0;

    bool operator==(const SourceSpan&) const = default;
};

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected;
};

using ParseResult = std::variant<SetExpr, ParseError>;

// Recursive-descent parser for the set-expression DSL:
//
//   expr   := term { ("|" | "\") term }           left-associative
//   term   := factor { "&" factor }
//   factor := "~" factor | "(" expr ")" | atom
//   atom   := "empty" | "all" | "finite" "{" intlist "}"
//           | "cofinite" "{" intlist "}" | "mod" int int | "powers" int
//           | "primes" | "superexp" | "bitodd" | "leading1"
//
// "~" binds tightest, then "&", then "|" and "\" (equal precedence).
// Whitespace is insignificant; trailing input is an error. "mod a i" is the
// residue class {n : n mod a = i}; "superexp" is the super-exponential
// block set.
ParseResult parse(std::string_view text);

// Caret diagnostic for a parse error (multi-line, ends without newline).
std::string format_parse_error(std::string_view text, const ParseError& error);

}  // namespace nsize
