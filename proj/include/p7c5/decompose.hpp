#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

// Nonadjacent pair with N(u) subseteq N(v); u is the removable vertex.
// Returns the lexicographically least such ordered pair.
std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g);

// The set of vertices adjacent to everything else, i.e. the unique maximal
// clique complete to the rest of the graph.  For a complete graph this is
// all of V, so clique peeling bottoms out at the empty graph.
std::optional<VertexSet> find_universal_clique(const Graph& g);

// A clique whose removal disconnects the graph, or nothing.  Input must be
// connected.  Implemented by enumerating all minimal separators (seed
// separators close to each vertex, then closure under the expansion step)
// and keeping the lexicographically least clique among them; potentially
// slow on adversarial inputs, fine at the scales this library targets.
std::optional<VertexSet> find_clique_cutset(const Graph& g);

// All minimal separators, each sorted lexicographically as a vertex list;
// exposed for tests.
std::vector<VertexSet> minimal_separators(const Graph& g);

// Some homogeneous set (1 < |S| < n, every outside vertex complete or
// anticomplete to S), minimal for its lexicographically least seed pair.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

struct TwinQuotient {
    std::vector<VertexSet> classes; // false-twin classes, each a stable set
    std::vector<int> class_of;      // vertex -> class index
    Graph quotient;                 // one vertex per class
};

// Classes of the relation "same open neighborhood" (such vertices are
// automatically nonadjacent); the input is a blowup of its quotient.
TwinQuotient twin_quotient(const Graph& g);

// Same with closed neighborhoods: classes are cliques, and the input is a
// clique blowup of the quotient.
TwinQuotient true_twin_quotient(const Graph& g);

} // namespace p7c5
