#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p7c5/graph.hpp"

namespace p7c5 {

struct Pattern {
    enum class Kind {
        path,          // P_t, t >= 1
        hole,          // C_t, t >= 4 (induced cycle)
        odd_hole,      // any odd hole of length >= 5
        odd_antihole,  // any odd antihole of length >= 5
        diamond,
        paw,
        kite,
        paraglider,
        gem,
        bull,
    };

    Kind kind;
    int size = 0; // only meaningful for path / hole

    static Pattern path(int t);
    static Pattern hole(int t);
    static Pattern odd_hole() { return {Kind::odd_hole, 0}; }
    static Pattern odd_antihole() { return {Kind::odd_antihole, 0}; }
    static Pattern diamond() { return {Kind::diamond, 4}; }
    static Pattern paw() { return {Kind::paw, 4}; }
    static Pattern kite() { return {Kind::kite, 5}; }
    static Pattern paraglider() { return {Kind::paraglider, 5}; }
    static Pattern gem() { return {Kind::gem, 5}; }
    static Pattern bull() { return {Kind::bull, 5}; }

    // The concrete graph for fixed-shape patterns (everything except
    // odd_hole / odd_antihole, which stand for whole families).
    Graph shape() const;

    std::string name() const;

    // Parses the CLI spelling: p7, c5, diamond, kite, paraglider, paw, gem,
    // bull, odd-hole, odd-antihole, and generic p<t> / c<t>.
    static Pattern from_name(const std::string& name);
};

struct Embedding {
    Pattern pattern;
    std::vector<int> image; // host vertices, in pattern-vertex order

    // Re-checks, edge by edge, that image induces exactly the pattern.
    bool verify(const Graph& host) const;
};

// Exhaustive induced-subgraph search.  Returns the lexicographically least
// witness (as an image sequence) or nothing; a pattern larger than the host
// is simply absent.
std::optional<Embedding> find_induced(const Graph& g, const Pattern& p);

// First induced odd cycle of length >= 5 found by a deterministic DFS, in
// cycle order.  target_length restricts to one length; 0 means any odd.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int target_length = 0);

// Perfection test per the strong perfect graph characterization: no odd hole
// in the graph or its complement.  Exact and exponential, hence the cap.
constexpr int default_perfection_limit = 32;
bool is_perfect(const Graph& g, int size_limit = default_perfection_limit);

enum class GraphClass { kp, diamond, paw, bull };

std::string class_name(GraphClass c);
GraphClass class_from_name(const std::string& name);

// Forbidden patterns defining each class (all include P7 and C5).
const std::vector<Pattern>& class_forbidden_patterns(GraphClass c);

struct ClassMembership {
    bool member = false;
    std::optional<Embedding> witness; // violating occurrence when not a member
};

ClassMembership class_membership(const Graph& g, GraphClass c);

} // namespace p7c5
