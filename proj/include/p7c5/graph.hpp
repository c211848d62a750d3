#pragma once

#include <utility>
#include <vector>

#include "p7c5/bitset.hpp"
#include "p7c5/errors.hpp"

namespace p7c5 {

using Edge = std::pair<int, int>;

struct InducedSubgraph;

// Immutable simple undirected graph over vertices 0..n-1, adjacency kept as
// symmetric bit rows.  Everything downstream assumes this cannot change after
// construction, which is what makes batch processing trivially thread-safe.
class Graph {
public:
    static constexpr int max_vertices = 1024;

    Graph() = default;

    static Graph build(int n, const std::vector<Edge>& edges);

    static Graph empty_graph(int n) { return build(n, {}); }
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    // Non-neighbors of v, excluding v itself.
    VertexSet non_neighbors(int v) const;

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    // N(X): vertices outside X with a neighbor in X.
    VertexSet neighbors_of_set(const VertexSet& x) const;
    // M(X): vertices outside X with no neighbor in X.
    VertexSet non_neighbors_of_set(const VertexSet& x) const;

    bool is_complete_to(int v, const VertexSet& x) const;
    bool is_anticomplete_to(int v, const VertexSet& x) const;
    bool is_complete_between(const VertexSet& x, const VertexSet& y) const;
    bool is_anticomplete_between(const VertexSet& x, const VertexSet& y) const;
    bool is_clique(const VertexSet& x) const;
    bool is_stable_set(const VertexSet& x) const;

    Graph complement() const;

    InducedSubgraph induced(const VertexSet& s) const;

    std::vector<Edge> edges() const;

    // Copy with one edge toggled; mutation hook for negative tests.
    Graph with_edge_toggled(int u, int v) const;

    struct BasicStats {
        int min_degree = 0;
        bool connected = false;
        std::vector<VertexSet> components;
    };
    BasicStats basic_stats() const;

    VertexSet component_of(int v) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("vertex out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> deg_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original; // new index -> original vertex
};

} // namespace p7c5
