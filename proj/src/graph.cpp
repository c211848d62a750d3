#include "p7c5/graph.hpp"

#include <string>

namespace p7c5 {

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    if (n > max_vertices)
        throw size_limit_error("vertex count " + std::to_string(n) + " exceeds cap of " +
                               std::to_string(max_vertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    g.deg_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw input_error("self-loop rejected at vertex " + std::to_string(u));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    for (int v = 0; v < n; ++v) g.deg_[v] = g.adj_[v].count();
    return g;
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return build(n, e);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build(n, e);
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return build(n, e);
}

VertexSet Graph::non_neighbors(int v) const {
    check_vertex(v);
    VertexSet m = VertexSet::full(n_);
    m -= adj_[v];
    m.reset(v);
    return m;
}

VertexSet Graph::neighbors_of_set(const VertexSet& x) const {
    VertexSet out(n_);
    x.for_each([&](int v) { out |= adj_[v]; });
    out -= x;
    return out;
}

VertexSet Graph::non_neighbors_of_set(const VertexSet& x) const {
    VertexSet out = VertexSet::full(n_);
    out -= x;
    out -= neighbors_of_set(x);
    return out;
}

bool Graph::is_complete_to(int v, const VertexSet& x) const {
    check_vertex(v);
    VertexSet rest = x;
    rest.reset(v);
    return rest.subset_of(adj_[v]);
}

bool Graph::is_anticomplete_to(int v, const VertexSet& x) const {
    check_vertex(v);
    return !adj_[v].intersects(x);
}

bool Graph::is_complete_between(const VertexSet& x, const VertexSet& y) const {
    bool ok = true;
    x.for_each([&](int v) {
        if (ok && !y.test(v) && !is_complete_to(v, y)) ok = false;
    });
    return ok;
}

bool Graph::is_anticomplete_between(const VertexSet& x, const VertexSet& y) const {
    bool ok = true;
    x.for_each([&](int v) {
        if (ok && adj_[v].intersects(y)) ok = false;
    });
    return ok;
}

bool Graph::is_clique(const VertexSet& x) const {
    bool ok = true;
    x.for_each([&](int v) {
        if (!ok) return;
        VertexSet rest = x;
        rest.reset(v);
        if (!rest.subset_of(adj_[v])) ok = false;
    });
    return ok;
}

bool Graph::is_stable_set(const VertexSet& x) const {
    bool ok = true;
    x.for_each([&](int v) {
        if (ok && adj_[v].intersects(x)) ok = false;
    });
    return ok;
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.assign(n_, VertexSet(n_));
    g.deg_.assign(n_, 0);
    g.m_ = 0;
    for (int v = 0; v < n_; ++v) {
        g.adj_[v] = VertexSet::full(n_);
        g.adj_[v] -= adj_[v];
        g.adj_[v].reset(v);
        g.deg_[v] = g.adj_[v].count();
        g.m_ += g.deg_[v];
    }
    g.m_ /= 2;
    return g;
}

InducedSubgraph Graph::induced(const VertexSet& s) const {
    if (s.universe_size() != n_) throw input_error("vertex set belongs to a different graph");
    InducedSubgraph out;
    out.original = s.to_vector();
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < out.original.size(); ++i) pos[out.original[i]] = (int)i;
    std::vector<Edge> e;
    for (size_t i = 0; i < out.original.size(); ++i) {
        const VertexSet& row = adj_[out.original[i]];
        for (size_t j = i + 1; j < out.original.size(); ++j)
            if (row.test(out.original[j])) e.push_back({(int)i, (int)j});
    }
    out.graph = build((int)out.original.size(), e);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) e.push_back({u, v});
    return e;
}

Graph Graph::with_edge_toggled(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("cannot toggle a loop");
    auto e = edges();
    if (adjacent(u, v)) {
        std::erase_if(e, [&](const Edge& x) {
            return (x.first == u && x.second == v) || (x.first == v && x.second == u);
        });
    } else {
        e.push_back({u, v});
    }
    return build(n_, e);
}

VertexSet Graph::component_of(int v) const {
    check_vertex(v);
    VertexSet comp(n_);
    comp.set(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next(n_);
        frontier.for_each([&](int u) { next |= adj_[u]; });
        next -= comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

Graph::BasicStats Graph::basic_stats() const {
    BasicStats st;
    VertexSet seen(n_);
    for (int v = 0; v < n_; ++v) {
        if (seen.test(v)) continue;
        VertexSet comp = component_of(v);
        seen |= comp;
        st.components.push_back(comp);
    }
    st.connected = (st.components.size() == 1);
    st.min_degree = 0;
    for (int v = 0; v < n_; ++v)
        if (v == 0 || deg_[v] < st.min_degree) st.min_degree = deg_[v];
    return st;
}

} // namespace p7c5
