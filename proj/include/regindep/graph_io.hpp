#pragma once

#include <string>
#include <string_view>

#include "regindep/graph.hpp"

namespace regindep {

/// graph6 encoding (printable ASCII, no trailing newline).
///
/// Orders 0..62 use the one-byte header, 63..258047 the four-byte form and
/// larger orders the eight-byte form.
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a single
/// trailing newline are accepted. Throws ParseError on malformed input,
/// including padding bits set past the n(n-1)/2 adjacency bits.
Graph decode_graph6(std::string_view text);

/// Parses an edge list: one "u v" pair per line (0-indexed), '#' comments
/// and blank lines ignored. The first line is taken as an "n m" header when
/// exactly m edge lines follow and every endpoint is below n; otherwise the
/// order is one more than the largest endpoint.
Graph parse_edge_list(std::string_view text);

/// Writes the "n m" header followed by one edge per line.
std::string format_edge_list(const Graph& g);

/// graph6 if the text is a single whitespace-free token, else edge list.
Graph parse_graph_text(std::string_view text);

}  // namespace regindep
