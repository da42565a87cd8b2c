#ifndef SPECISO_FORMAT_HPP
#define SPECISO_FORMAT_HPP

#include <string>
#include <string_view>

#include "speciso/graph.hpp"

namespace speciso {

/// Decodes one line of graph6 (short-form header for n <= 62, '~'-prefixed
/// long forms above). A single trailing newline is tolerated; anything else
/// after the bit field is a ParseError carrying the byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes to canonical graph6: minimal header, zero padding bits.
std::string emit_graph6(const Graph& g);

/// Plain edge-list format: first line "n m", then m lines "u v" with
/// 1-indexed endpoints. Duplicate edges collapse silently; self-loops and
/// out-of-range endpoints are rejected.
Graph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

/// One line of n whitespace-separated 1-indexed images.
Permutation parse_permutation_line(std::string_view text);

/// Reads a graph file, picking the format by extension: ".g6" -> graph6,
/// ".el" -> edge list.
Graph load_graph_file(const std::string& path);

Permutation load_permutation_file(const std::string& path);

} // namespace speciso

#endif
