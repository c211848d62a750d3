#include "p7c5/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace p7c5 {

namespace {

// One refinement round: new color = rank of (old color, sorted neighbor
// colors).  Ranks are assigned by sorting signatures, so they are invariant
// under relabeling.
std::vector<int> refine_once(const Graph& g, const std::vector<int>& colors, bool& changed) {
    int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.push_back(colors[v]);
        g.neighbors(v).for_each([&](int u) { s.push_back(colors[u]); });
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
    }
    auto order = sig;
    std::sort(order.begin(), order.end());
    std::vector<int> next(n);
    int rank = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || order[i].first != order[i - 1].first) ++rank;
        next[order[i].second] = rank;
    }
    changed = false;
    for (int v = 0; v < n && !changed; ++v)
        if (next[v] != colors[v]) changed = true;
    // Detect a genuinely finer partition even when rank ids shift.
    if (!changed) return colors;
    return next;
}

// Ranks sort primarily by the old color, so a stable partition reproduces
// itself and the loop terminates after at most n+1 rounds.
std::vector<int> refine_to_stable(const Graph& g, std::vector<int> colors) {
    while (true) {
        bool changed = false;
        colors = refine_once(g, colors, changed);
        if (!changed) return colors;
    }
}

std::vector<int> initial_colors(const Graph& g) {
    std::vector<int> c(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) c[v] = g.degree(v);
    // Compress to dense ranks.
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& x : c) x = (int)(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    return c;
}

std::vector<uint64_t> code_under_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<uint64_t> code;
    code.push_back((uint64_t)n);
    uint64_t word = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            word = (word << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
            if (++bits == 64) {
                code.push_back(word);
                word = 0;
                bits = 0;
            }
        }
    if (bits) code.push_back(word << (64 - bits));
    return code;
}

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g) {}

    std::vector<uint64_t> run() {
        descend(refine_to_stable(g_, initial_colors(g_)));
        return best_;
    }

private:
    void descend(const std::vector<int>& colors) {
        int n = g_.vertex_count();
        // First non-singleton class, by color id.
        int target = -1;
        std::vector<int> count(n + 1, 0);
        for (int v = 0; v < n; ++v) ++count[colors[v]];
        for (int c = 0; c <= n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return colors[a] < colors[b]; });
            auto code = code_under_order(g_, order);
            if (best_.empty() || code < best_) best_ = std::move(code);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u) split[u] = colors[u] * 2 + (u == v ? 1 : 0);
            descend(refine_to_stable(g_, split));
        }
    }

    const Graph& g_;
    std::vector<uint64_t> best_;
};

} // namespace

std::vector<int> wl_colors(const Graph& g) { return refine_to_stable(g, initial_colors(g)); }

std::vector<uint64_t> canonical_code(const Graph& g) { return CanonSearch(g).run(); }

namespace {

bool verify_map(const Graph& a, const Graph& b, const std::vector<int>& map) {
    int n = a.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    return true;
}

class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {}

    std::optional<std::vector<int>> run() {
        int n = a_.vertex_count();
        if (n != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return std::nullopt;
        ca_ = wl_colors(a_);
        cb_ = wl_colors(b_);
        // Color histograms must agree.
        std::map<int, int> ha, hb;
        for (int c : ca_) ++ha[c];
        for (int c : cb_) ++hb[c];
        if (ha != hb) return std::nullopt;

        // Map a-vertices in order of ascending color class size (rarest
        // first), tie-broken by color then index.
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int x, int y) {
            auto kx = std::make_tuple(ha[ca_[x]], ca_[x], x);
            auto ky = std::make_tuple(ha[ca_[y]], ca_[y], y);
            return kx < ky;
        });
        map_.assign(n, -1);
        used_ = VertexSet(n);
        if (extend(0)) {
            if (!verify_map(a_, b_, map_)) return std::nullopt; // maps are re-checked edge by edge
            return map_;
        }
        return std::nullopt;
    }

private:
    bool extend(size_t depth) {
        if (depth == order_.size()) return true;
        int u = order_[depth];
        int n = a_.vertex_count();
        for (int w = 0; w < n; ++w) {
            if (used_.test(w) || cb_[w] != ca_[u]) continue;
            bool ok = true;
            for (size_t j = 0; j < depth && ok; ++j) {
                int x = order_[j];
                if (a_.adjacent(u, x) != b_.adjacent(w, map_[x])) ok = false;
            }
            if (!ok) continue;
            map_[u] = w;
            used_.set(w);
            if (extend(depth + 1)) return true;
            used_.reset(w);
            map_[u] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<int> ca_, cb_;
    std::vector<int> order_;
    std::vector<int> map_;
    VertexSet used_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    return IsoSearch(a, b).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

} // namespace p7c5
