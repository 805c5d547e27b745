#pragma once

#include <string>

#include "qsl2/algebra.hpp"

namespace qsl2 {

// Parses an algebra expression into a normally ordered element.
//
//   element := ('+'|'-')? term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := atom ('^' int)?
//   atom    := 'e' | 'f' | 'k' | 't' | int | '[' int ']'
//            | '(' element ')' | 'sqrt' '(' element ')'
//
// '[n]' is the q-integer [n].  Division and negative powers require the right
// operand to be invertible (a scalar, or a scalar multiple of a power of k);
// sqrt requires a rational scalar argument.  Whitespace is insignificant.
// Errors carry the offending offset.
AlgebraElement parse_element(const std::string& src);

}  // namespace qsl2
