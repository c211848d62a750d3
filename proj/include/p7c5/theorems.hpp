#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p7c5/families.hpp"
#include "p7c5/graph.hpp"
#include "p7c5/patterns.hpp"

namespace p7c5 {

// Executable verdict for one structure statement on one graph: each
// hypothesis is evaluated in a fixed cheap-to-expensive order with short
// circuiting; the conclusion is only decided when all hypotheses hold.
struct TheoremVerdict {
    struct HypothesisCheck {
        std::string name;
        bool evaluated = false;
        bool holds = false;
    };

    GraphClass theorem;
    std::vector<HypothesisCheck> hypotheses;
    bool hypotheses_hold = false;
    std::optional<bool> conclusion_holds; // empty when hypotheses fail

    // Human-readable certificate: the branch that made the conclusion true
    // ("universal clique {..}", "family F7", "blowup (2,1,1,1,1,1,1)",
    // "all non-neighborhoods perfect", "homogeneous set {..}"), or what
    // failed.
    std::string certificate;

    // Structured payloads for re-verification.
    std::optional<VertexSet> universal_clique;
    std::optional<FamilySpec> family;
    std::optional<std::vector<int>> blowup_sizes; // canonical under rotation/reflection
};

// kp: connected, imperfect, class member, no clique cutset, min degree
//     >= omega+1, no comparable pair  =>  universal clique or the 12-vertex
//     family F1.
// diamond: connected, imperfect, class member, min degree >= max{3, omega},
//     no comparable pair  =>  one of the twelve families.
// paw: connected, imperfect, class member  =>  blowup of the 7-cycle.
TheoremVerdict verify_structure(const Graph& g, GraphClass theorem,
                                int perfection_limit = default_perfection_limit);

// bull: class member within the perfection cap.  Without homogeneous sets,
// checks that every vertex has a perfect non-neighborhood (and reports the
// first valid perfect/smaller-clique split); with one, reports it.
TheoremVerdict verify_perfect_divisibility(const Graph& g,
                                           int perfection_limit = default_perfection_limit);

// Canonical representative of a bag-size vector under the dihedral symmetry
// of the 7-cycle (lexicographic minimum over rotations and reflections).
std::vector<int> canonical_blowup_sizes(const std::vector<int>& sizes);

} // namespace p7c5
