#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

// Vertex map a -> b witnessing isomorphism, verified edge by edge before
// being returned.  Degree/1-WL refinement prunes the backtracking, which is
// plenty for the graph sizes this project manipulates.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

// Canonical form by individualization-refinement, minimizing the adjacency
// code over the search tree.  Equal codes iff isomorphic.  Exponential in
// the worst case; intended for small graphs (enumeration, dedup).
std::vector<uint64_t> canonical_code(const Graph& g);

// Stable 1-WL colors (isomorphism-invariant vertex classes).
std::vector<int> wl_colors(const Graph& g);

} // namespace p7c5
