#pragma once

// Set expressions for the command line.
//
//   expr    := term { ("union" | "diff") term }
//   term    := unary { "inter" unary }
//   unary   := "inverse" unary | "complement" unary
//            | "translate" "(" element ")" unary | primary
//   primary := "(" expr ")" | atom
//   atom    := evens | squares | naturals | all | empty
//            | multiples(k) | powers(b) | weight=k
//            | lambda=<letter> | rho=<letter>
//            | explicit[g, ...] | fp(g1, ..., gn)
//
// Element literals use the group's own notation and may contain brackets;
// commas split them only at bracket depth zero.

#include <string>
#include <string_view>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/subset.hpp"

namespace coarse {

// Throws ParseError with the offset of the offending token.
SubsetView parse_set_expression(const GroupView& G, std::string_view text);

// Comma-separated element list such as "0,1" or "e,a,ab^-1".
std::vector<Element> parse_element_list(const Group& G, std::string_view text);

}  // namespace coarse
