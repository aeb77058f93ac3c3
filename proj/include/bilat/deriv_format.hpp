#ifndef BILAT_DERIV_FORMAT_HPP
#define BILAT_DERIV_FORMAT_HPP

#include <string>
#include <string_view>

#include "bilat/derivation.hpp"

namespace bilat {

// Parenthesised tree syntax, e.g.
//   (+&I +p & q
//     (assume x +p)
//     (assume y +q))
// Parse errors are reported as ParseError with a byte offset.
Derivation parse_derivation(std::string_view text);

// Indented rendering with a trailing newline. parse_derivation inverts it and
// printing the parsed tree reproduces the text byte for byte.
std::string print_derivation(const Derivation& d);

// Single-line rendering for diagnostics.
std::string print_derivation_inline(const Derivation& d);

}  // namespace bilat

#endif  // BILAT_DERIV_FORMAT_HPP
