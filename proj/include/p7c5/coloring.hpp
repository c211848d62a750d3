#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p7c5/graph.hpp"
#include "p7c5/patterns.hpp"

namespace p7c5 {

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

// Exact maximum clique, branch and bound with a greedy-coloring bound.
CliqueResult max_clique(const Graph& g);

constexpr int default_exact_limit = 24;

struct ReductionStep {
    enum class Kind {
        remove_comparable,       // payload = {removed, dominator}
        extract_universal_clique,// payload = clique vertices
        split_clique_cutset,     // payload = cutset vertices
        split_components,        // payload empty
        remove_low_degree,       // payload = {removed}
        contract_homogeneous,    // payload = homogeneous set, aux = representative
        base_perfect,            // payload = vertices colored exactly
        base_family,             // payload = vertices, label = family spec
        base_blowup,             // payload = vertices, label = bag sizes
    };
    Kind kind;
    std::vector<int> payload; // original-graph vertex ids
    std::string label;
};

using ReductionTrace = std::vector<ReductionStep>;

struct Coloring {
    std::vector<int> assignment;
    int colors_used = 0;
    ReductionTrace trace;

    bool proper(const Graph& g) const;
};

// Exact chromatic number; exponential search capped by size_limit.
struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};
ChromaticResult exact_chromatic(const Graph& g, int size_limit = default_exact_limit);

// Class bound the structural pipeline promises: omega+1 for kp,
// max{3, omega} for diamond and paw.
int class_color_bound(GraphClass c, int omega);

// Structural coloring by reductions: components, comparable-pair deletion,
// universal-clique peeling, clique-cutset split, exact coloring of perfect
// pieces, low-degree deletion, then the structure-theorem base cases
// (the fixed families, blowups of the 7-cycle).  Throws structure_error when
// an irreducible piece matches no base case, which for a graph genuinely in
// the class would contradict the structure theorems; class membership is
// not pre-checked.
Coloring structural_color(const Graph& g, GraphClass cls,
                          int exact_limit = default_exact_limit,
                          int perfection_limit = default_perfection_limit);

// Coloring through perfect/smaller-clique partitions; uses at most
// C(omega+1, 2) colors.  Intended for the bull class.
Coloring divisible_color(const Graph& g, int perfection_limit = default_perfection_limit,
                         int exact_limit = default_exact_limit);

// One partition step: P with G[P] perfect, rest with strictly smaller
// clique number.  Exposed for the theorem verifier.
struct DivisiblePartition {
    VertexSet perfect_part;
    VertexSet rest;
    std::optional<int> pivot;           // vertex whose non-neighborhood was used
    std::optional<VertexSet> homogeneous; // set contracted to get the partition
};
DivisiblePartition divisible_partition(const Graph& g, int perfection_limit);

} // namespace p7c5
