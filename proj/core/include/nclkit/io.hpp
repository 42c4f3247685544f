#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "nclkit/graph.hpp"

namespace nclkit {

// Edge-list text: first record `n m`, then m records `u v` (0-indexed). Anything
// after '#' on a line is a comment. Throws parse_error.
Graph parse_edge_list(std::string_view text);
// Writes `n m` then edges in ascending (u, v) order with u < v. Each line of
// `comment`, if non-empty, is emitted first prefixed by "# ".
std::string format_edge_list(const Graph& g, std::string_view comment = {});

// graph6 as published with nauty: size header (n+63, or '~' + 18 bits, or '~~' + 36 bits)
// followed by the upper triangle packed column by column, 6 bits per byte, offset 63.
// No trailing newline.
std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix. Rejects malformed headers, wrong body
// length and non-zero padding bits with parse_error.
Graph decode_graph6(std::string_view bytes);

enum class GraphFormat { edge_list, graph6 };

// Guesses the format from the first significant character: a digit or '#' means
// edge list, anything else graph6. For graph6 a single graph line is expected.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
// "-" reads stdin.
Graph read_graph_file(const std::string& path);

}  // namespace nclkit
