#pragma once

#include <optional>
#include <string>

#include "treecodes/graph.hpp"
#include "treecodes/vertex_set.hpp"

namespace treecodes {

/// Parses the edge-list format:
///
///   # comment
///   n m        (optional header; if absent, n = 1 + largest vertex id)
///   u v        (one edge per line)
///
/// Blank lines and '#' comments are ignored. Without a header at least one
/// edge is required, since the order would otherwise be unknown.
Graph from_edge_list(const std::string& text);

/// Serializes as an "n m" header followed by sorted "u v" lines.
std::string to_edge_list(const Graph& g);

/// Encodes in graph6 format (printable ASCII, one line, no trailing newline).
std::string graph6_encode(const Graph& g);

/// Decodes a graph6 string; tolerates the optional ">>graph6<<" prefix and
/// surrounding whitespace.
Graph graph6_decode(const std::string& text);

/// Graphviz source. Vertices listed in `code` (if given) are drawn filled.
std::string to_dot(const Graph& g, const std::optional<VertexSet>& code = std::nullopt);

}  // namespace treecodes
