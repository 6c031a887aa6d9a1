#pragma once

#include <string>
#include <string_view>

#include "alliance/graph.hpp"

namespace alliance {

// Plain-text edge list:
//   first non-comment line "n m", then m lines "u v" (0-based endpoints).
// '#' starts a comment anywhere; blank lines are skipped. In strict mode a
// duplicate edge is a parse_error; otherwise duplicates are dropped with a
// note on stderr. Throws parse_error on malformed input, limit_error when the
// header asks for more than kMaxVertices vertices.
Graph parse_edge_list(std::string_view text, bool strict = true);

// Canonical edge list: "n m" header, edges as "u v" with u < v in sorted
// order, one per line, trailing newline. parse_edge_list round-trips it.
std::string format_edge_list(const Graph& g);

// graph6 format (one graph per string, optional ">>graph6<<" prefix and
// trailing newline). Supports n <= 62, i.e. the single-byte size encoding.
Graph parse_graph6(std::string_view text);

inline constexpr int kGraph6MaxVertices = 62;

}  // namespace alliance
