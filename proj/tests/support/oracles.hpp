#pragma once

// Independent reference implementations used only to cross-check the
// library.  Deliberately naive and kept free of the main search code paths.

#include <optional>

#include "p7c5/graph.hpp"
#include "p7c5/patterns.hpp"

namespace p7c5::oracle {

// Increasing-k enumeration: smallest k admitting a proper coloring, found by
// plain backtracking in vertex order.
int naive_chromatic(const Graph& g);

// All-subsets induced-pattern search: every |shape|-subset of the host is
// tested against the pattern by permutation backtracking.
bool subset_contains(const Graph& g, const Pattern& p);

// Exhaustive clique cutset check: some subset that is a clique and whose
// removal raises the component count (graph assumed connected).
bool has_clique_cutset_subsets(const Graph& g);

// Exhaustive homogeneous set check over all vertex subsets.
bool has_homogeneous_set_subsets(const Graph& g);

// Exhaustive minimal-separator check for cross-validating the enumerator.
bool is_minimal_separator_subsets(const Graph& g, const VertexSet& s);

// Compositions of n into seven positive parts, counted up to rotation and
// reflection of the cycle positions.
long count_blowup_size_vectors(int n);

} // namespace p7c5::oracle
