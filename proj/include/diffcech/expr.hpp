#pragma once

// Recursive-descent parser for the textual forms of scalars and polynomial
// functions: numbers, `a` (also `alpha`), variables `x0`, `x1`, ..., the
// operators + - * / ^ and parentheses. Division is allowed only by
// expressions free of x-variables; exponents are non-negative integers
// (negative exponents are accepted on x-free bases).

#include "diffcech/mpoly.hpp"
#include "diffcech/rational_function.hpp"

#include <string>

namespace diffcech {

MPoly parse_polynomial_expression(const std::string& text);
Scalar parse_scalar_expression(const std::string& text);

} // namespace diffcech
