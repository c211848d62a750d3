#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

// graph6 interchange format (nauty-compatible): one line per graph.
// Header: byte 63+n for n <= 62, or '~' followed by three bytes carrying an
// 18-bit n (each byte = 63 + 6 bits, big-endian) for n <= 258047.  Payload:
// the upper triangle read column by column (column j, rows 0..j-1), packed
// 6 bits per byte MSB-first, each byte offset by 63; padding bits are zero.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

// Plain edge list: "n m" header line, then m lines "u v", 0-indexed.
Graph parse_edgelist(const std::string& text);
std::string emit_edgelist(const Graph& g);

// Graphviz output; pass a coloring to fill vertices by color class.
std::string emit_dot(const Graph& g, const std::vector<int>* coloring = nullptr);

struct GraphRecord {
    Graph graph;
    std::string source; // "<file>:<line>" of the input record
};

enum class StreamFormat { graph6, edgelist };

// Reads a whole stream of graphs.  For graph6 every nonempty line is one
// graph; for edge lists records are separated by blank lines.
std::vector<GraphRecord> read_graph_stream(std::istream& in, StreamFormat fmt,
                                           const std::string& name);

} // namespace p7c5
