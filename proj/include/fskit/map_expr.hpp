#pragma once

#include <functional>
#include <string_view>

#include "fskit/fuzzy_real.hpp"

namespace fskit {

/// Parse a one-variable arithmetic expression over x with + - * /, unary
/// minus, parentheses and decimal literals, e.g. "x/2+1" or "0.3*(x-4)".
std::function<double(double)> parse_scalar_map(std::string_view expr);

/// Parse a fuzzy-real expression: add/sub/mul/div(<expr>, <expr>) over the
/// leaves tri(a,b,c) and crisp(r), e.g. "add(tri(1,2,3), crisp(2))".
FuzzyReal parse_fuzzy_real_expr(std::string_view expr, const AlphaGrid& grid,
                                ArithmeticTrace* trace = nullptr);

}  // namespace fskit
