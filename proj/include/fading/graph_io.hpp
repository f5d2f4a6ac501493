#pragma once

#include <string>
#include <string_view>

#include "fading/graph.hpp"

namespace fading {

// graph6: order header, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups offset by 63.
// An optional ">>graph6<<" prefix and trailing line break are accepted.
// Errors throw FormatError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge list: first non-blank line is the order n, each further non-blank
// line is "u v". Lines starting with '#' are comments. Errors throw
// FormatError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

} // namespace fading
