#include "p7c5/decompose.hpp"

#include <algorithm>
#include <set>

namespace p7c5 {

std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || g.adjacent(u, v)) continue;
            if (g.neighbors(u).subset_of(g.neighbors(v))) return std::make_pair(u, v);
        }
    return std::nullopt;
}

std::optional<VertexSet> find_universal_clique(const Graph& g) {
    int n = g.vertex_count();
    VertexSet k(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) k.set(v);
    if (k.empty()) return std::nullopt;
    return k;
}

namespace {

std::vector<VertexSet> components_of_removed(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    VertexSet left = VertexSet::full(n);
    left -= removed;
    std::vector<VertexSet> comps;
    VertexSet seen(n);
    for (int v = left.first(); v >= 0; v = left.next(v + 1)) {
        if (seen.test(v)) continue;
        VertexSet comp(n);
        comp.set(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet nxt(n);
            frontier.for_each([&](int u) { nxt |= g.neighbors(u); });
            nxt -= removed;
            nxt -= comp;
            comp |= nxt;
            frontier = nxt;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

struct SetLess {
    bool operator()(const VertexSet& a, const VertexSet& b) const {
        return a.words() < b.words();
    }
};

} // namespace

std::vector<VertexSet> minimal_separators(const Graph& g) {
    int n = g.vertex_count();
    std::set<VertexSet, SetLess> seen;
    std::vector<VertexSet> queue;

    auto push = [&](const VertexSet& s) {
        if (s.empty()) return;
        if (seen.insert(s).second) queue.push_back(s);
    };

    // Seeds: separators close to each vertex.
    for (int v = 0; v < n; ++v) {
        VertexSet closed = g.neighbors(v);
        closed.set(v);
        for (const VertexSet& comp : components_of_removed(g, closed))
            push(g.neighbors_of_set(comp));
    }
    // Closure under the expansion step.
    for (size_t i = 0; i < queue.size(); ++i) {
        VertexSet s = queue[i];
        for (int x = s.first(); x >= 0; x = s.next(x + 1)) {
            VertexSet removed = s;
            removed |= g.neighbors(x);
            removed.set(x);
            for (const VertexSet& comp : components_of_removed(g, removed))
                push(g.neighbors_of_set(comp));
        }
    }

    // Keep only genuine minimal separators: those with two full components.
    std::vector<VertexSet> out;
    for (const VertexSet& s : queue) {
        int full = 0;
        for (const VertexSet& comp : components_of_removed(g, s))
            if (g.neighbors_of_set(comp) == s) ++full;
        if (full >= 2) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.to_vector() < b.to_vector();
    });
    return out;
}

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
    if (!g.basic_stats().connected) throw input_error("clique cutset search needs a connected graph");
    std::optional<VertexSet> best;
    std::vector<int> best_key;
    for (const VertexSet& s : minimal_separators(g)) {
        if (!g.is_clique(s)) continue;
        auto key = s.to_vector();
        if (!best || key < best_key) {
            best = s;
            best_key = key;
        }
    }
    return best;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // Minimal module containing {u, v}: close under splitters.
            VertexSet s(n);
            s.set(u);
            s.set(v);
            bool grew = true;
            while (grew && s.count() < n) {
                grew = false;
                for (int w = 0; w < n; ++w) {
                    if (s.test(w)) continue;
                    bool has = g.neighbors(w).intersects(s);
                    if (!has) continue;
                    VertexSet inside = s;
                    inside.reset(w);
                    if (!inside.subset_of(g.neighbors(w))) { // w is a splitter
                        s.set(w);
                        grew = true;
                    }
                }
            }
            if (s.count() < n) return s;
        }
    }
    return std::nullopt;
}

namespace {

TwinQuotient quotient_by(const Graph& g, bool closed) {
    int n = g.vertex_count();
    TwinQuotient out;
    out.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (out.class_of[v] >= 0) continue;
        VertexSet cls(n);
        cls.set(v);
        VertexSet nv = g.neighbors(v);
        if (closed) nv.set(v);
        for (int u = v + 1; u < n; ++u) {
            if (out.class_of[u] >= 0) continue;
            VertexSet nu = g.neighbors(u);
            if (closed) nu.set(u);
            // Compare neighborhoods outside {u, v}; with closed
            // neighborhoods this makes adjacent clones match too.
            VertexSet a = nv, b = nu;
            if (closed) {
                a.set(u);
                b.set(v);
            }
            if (a == b) cls.set(u);
        }
        int idx = (int)out.classes.size();
        cls.for_each([&](int u) { out.class_of[u] = idx; });
        out.classes.push_back(cls);
    }
    int k = (int)out.classes.size();
    std::vector<Edge> qedges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(out.classes[a].first(), out.classes[b].first())) qedges.push_back({a, b});
    out.quotient = Graph::build(k, qedges);
    return out;
}

} // namespace

TwinQuotient twin_quotient(const Graph& g) { return quotient_by(g, false); }

TwinQuotient true_twin_quotient(const Graph& g) { return quotient_by(g, true); }

} // namespace p7c5
