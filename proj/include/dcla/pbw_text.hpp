#pragma once

#include <string_view>

#include "pbw.hpp"

namespace dcla::pbw {

// Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ['^' integer]
//   primary := integer ['/' integer] | 'Q' | 'X+(' integer ')' | 'X-(' integer ')'
//            | 'J(' integer ')' | '(' expr ')'
// Throws ParseError carrying the 0-based offset of the offending character.
Expression parse_expression(std::string_view text);

}  // namespace dcla::pbw
