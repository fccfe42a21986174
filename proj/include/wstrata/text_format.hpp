#pragma once

#include <string>
#include <vector>

#include "wstrata/ext_element.hpp"
#include "wstrata/group_context.hpp"

namespace wstrata {

// Canonical text form of a group element: the Omega power first, then the
// canonical reduced word, e.g. "t s0 s2"; the identity is "e", inverse
// powers render as "t^-1", "t^-2", ...
std::string render_element(const GroupContext&, const ExtElement&);
std::string render_word(const CanonicalWord&);

// Parse a whitespace-separated product of tokens `e`, `t`, `t^K`, `s0`..`sG`
// composed left to right.  Throws FormatError on anything else.
ExtElement parse_element(const GroupContext&, const std::string& text);

// Parse a comma-separated integer list such as "0,2".  Throws FormatError.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace wstrata
