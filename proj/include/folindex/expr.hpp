#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "folindex/lexer.hpp"
#include "folindex/poly.hpp"

namespace folindex {

/// Resolves a non-variable identifier to a polynomial, or nullptr.
using PolyLookup = std::function<const Poly*(const std::string&)>;

/// Polynomial expression: + - * ^ parentheses, integer literals, division by
/// constant subexpressions (so "3/2" is a rational literal).  Stops at the
/// first token that cannot continue the expression.
Poly parse_poly_expr(TokenStream& ts, std::span<const std::string> vars, const PolyLookup& lookup = {});

/// Whole-string convenience wrapper.
Poly parse_poly(std::string_view text, std::span<const std::string> vars);

/// Optionally signed rational literal "a", "-a", "a/b".
Rational parse_rational(TokenStream& ts);

}  // namespace folindex
