#pragma once

#include <string>

#include "pin2k/rep_element.hpp"

namespace pin2k {

// Evaluates a ring expression over R(G). Grammar (whitespace-insensitive):
//
//   expr   := term (('+' | '-') term)*
//   term   := power ('*' power)*
//   power  := unary ('^' digits)?
//   unary  := '-' unary | atom
//   atom   := digits | 't1' | 'h' digits | 'z' [digits] | '(' expr ')'
//
// 't1' is the sign representation 1~, 'h<i>' the i-th two dimensional
// irreducible, 'z<f>' the generator of the f-th finite factor ('z' alone
// means 'z1'). Exponents are nonnegative integers. For odd-type groups the
// expression is evaluated in the ambient ring R(Pin(2) x Z/2^(p+1)) and then
// checked to lie in the subring R(G_odd); a parity violation is an error.
RepElement parse_ring_expression(const std::string& text, const GroupSpec& group);

}  // namespace pin2k
