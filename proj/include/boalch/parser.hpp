#pragma once

#include <stdexcept>
#include <string>

#include "boalch/quiver.hpp"

namespace boalch {

struct ParseError : std::runtime_error {
  size_t pos;  // 0-based offset into the input
  ParseError(const std::string& what, size_t p) : std::runtime_error(what), pos(p) {}
};

// Expression mini-language: tokens e1, v12, w12, g1, g1inv with an optional
// color prefix `c:`; product by juxtaposition or `*`; `+`/`-`; rational
// literals like 3/2; parentheses. Whitespace-insensitive. Symbols are
// validated against the quiver (vertex range and arrow existence).
AlgElem parse_expr(const std::string& text, const ColoredQuiver& q);

// Sum of tensor terms `lhs (x) rhs` joined by `+`/`-`, each side an
// expression in the mini-language. "0" denotes the zero tensor.
TensorElem2 parse_tensor2(const std::string& text, const ColoredQuiver& q);

}  // namespace boalch
