#ifndef QDEG_PARSER_HPP
#define QDEG_PARSER_HPP

#include "qdeg/graded_ring.hpp"
#include "qdeg/polynomial.hpp"

#include <string_view>

namespace qdeg {

/// Parses a polynomial in the ring's variables. Grammar:
///
///   expr    = [ "+" | "-" ] term { ( "+" | "-" ) term }
///   term    = factor { "*" factor }
///   factor  = primary [ "^" digits ]
///   primary = digits [ "/" digits ] | identifier | "(" expr ")"
///
/// Identifiers are letters, digits and underscores starting with a letter,
/// so subscripted names such as x_1 are single tokens. Whitespace is ignored.
/// Throws ParseError (with the byte offset) on malformed input or unknown
/// variable names.
Polynomial parse_polynomial(std::string_view text, const GradedRing& ring);

}  // namespace qdeg

#endif
