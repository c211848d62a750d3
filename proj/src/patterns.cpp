#include "p7c5/patterns.hpp"

#include <algorithm>

namespace p7c5 {

Pattern Pattern::path(int t) {
    if (t < 1) throw input_error("path pattern needs t >= 1");
    return {Kind::path, t};
}

Pattern Pattern::hole(int t) {
    if (t < 4) throw input_error("hole pattern needs t >= 4");
    return {Kind::hole, t};
}

Graph Pattern::shape() const {
    switch (kind) {
    case Kind::path: return Graph::path(size);
    case Kind::hole: return Graph::cycle(size);
    // Shared edge 0-1; degree-2 vertices of the diamond are 2 and 3.
    case Kind::diamond: return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    case Kind::paw: return Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    case Kind::kite:
        return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}});
    case Kind::paraglider:
        return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    case Kind::gem:
        return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    case Kind::bull: return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    default: throw input_error("pattern family has no single shape");
    }
}

std::string Pattern::name() const {
    switch (kind) {
    case Kind::path: return "p" + std::to_string(size);
    case Kind::hole: return "c" + std::to_string(size);
    case Kind::odd_hole: return "odd-hole";
    case Kind::odd_antihole: return "odd-antihole";
    case Kind::diamond: return "diamond";
    case Kind::paw: return "paw";
    case Kind::kite: return "kite";
    case Kind::paraglider: return "paraglider";
    case Kind::gem: return "gem";
    case Kind::bull: return "bull";
    }
    return "?";
}

Pattern Pattern::from_name(const std::string& name) {
    if (name == "diamond") return diamond();
    if (name == "paw") return paw();
    if (name == "kite") return kite();
    if (name == "paraglider") return paraglider();
    if (name == "gem") return gem();
    if (name == "bull") return bull();
    if (name == "odd-hole") return odd_hole();
    if (name == "odd-antihole") return odd_antihole();
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c')) {
        try {
            int t = std::stoi(name.substr(1));
            return name[0] == 'p' ? path(t) : hole(t);
        } catch (const std::exception&) {
        }
    }
    throw input_error("unknown pattern name: " + name);
}

bool Embedding::verify(const Graph& host) const {
    if (pattern.kind == Pattern::Kind::odd_hole || pattern.kind == Pattern::Kind::odd_antihole) {
        int k = (int)image.size();
        if (k < 5 || k % 2 == 0) return false;
        bool anti = pattern.kind == Pattern::Kind::odd_antihole;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (image[i] == image[j]) return false;
                bool cyc = (j - i == 1) || (i == 0 && j == k - 1);
                if (host.adjacent(image[i], image[j]) != (cyc != anti)) return false;
            }
        return true;
    }
    Graph shape = pattern.shape();
    if ((int)image.size() != shape.vertex_count()) return false;
    for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] == image[j]) return false;
            if (host.adjacent(image[i], image[j]) != shape.adjacent((int)i, (int)j)) return false;
        }
    return true;
}

namespace {

// Backtracking over partial maps in pattern-vertex order; candidates are
// pruned with bitset intersections, and trying host vertices in ascending
// order makes the first hit the lexicographically least image.
class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& shape) : host_(host), shape_(shape) {}

    std::optional<std::vector<int>> run() {
        int k = shape_.vertex_count();
        if (k > host_.vertex_count()) return std::nullopt;
        image_.assign(k, -1);
        used_ = VertexSet(host_.vertex_count());
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    bool extend(int depth) {
        int k = shape_.vertex_count();
        if (depth == k) return true;
        VertexSet cand = VertexSet::full(host_.vertex_count());
        cand -= used_;
        for (int j = 0; j < depth; ++j) {
            if (shape_.adjacent(j, depth))
                cand &= host_.neighbors(image_[j]);
            else
                cand &= host_.non_neighbors(image_[j]);
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
            image_[depth] = v;
            used_.set(v);
            if (extend(depth + 1)) return true;
            used_.reset(v);
        }
        image_[depth] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& shape_;
    std::vector<int> image_;
    VertexSet used_;
};

// DFS over induced paths anchored at their minimum vertex s.  The running
// path is s, v1, ..., v_last; `blocked` holds N[v1] u ... u N[v_{last-1}]
// (closed neighborhoods of the interior), so any candidate outside it keeps
// the path chordless.  Chords to the anchor are forbidden separately because
// the closing vertex must touch s.
class HoleSearch {
public:
    HoleSearch(const Graph& g, int target, bool odd_only) : g_(g), target_(target), odd_(odd_only) {}

    std::optional<std::vector<int>> run() {
        int n = g_.vertex_count();
        for (int s = 0; s < n; ++s) {
            path_.clear();
            path_.push_back(s);
            if (dfs(s, VertexSet(n))) return path_;
        }
        return std::nullopt;
    }

private:
    bool length_ok(int len) const {
        if (target_ > 0) return len == target_;
        return len >= 5 && (!odd_ || len % 2 == 1);
    }
    bool may_extend(int len) const { return target_ == 0 || len + 2 <= target_; }

    bool dfs(int s, const VertexSet& blocked) {
        int last = path_.back();
        int len = (int)path_.size();
        VertexSet cand = g_.neighbors(last);
        cand -= blocked;

        if (len >= 4 && length_ok(len + 1)) {
            VertexSet closers = cand & g_.neighbors(s);
            int w = closers.next(s + 1);
            if (w >= 0) {
                path_.push_back(w);
                return true;
            }
        }
        if (!may_extend(len)) return false;

        VertexSet ext = cand;
        if (len >= 2) ext -= g_.neighbors(s);
        for (int w = ext.next(s + 1); w >= 0; w = ext.next(w + 1)) {
            VertexSet next_blocked = blocked;
            if (len >= 2) { // do not block the anchor's neighborhood
                next_blocked |= g_.neighbors(last);
                next_blocked.set(last);
            }
            path_.push_back(w);
            if (dfs(s, next_blocked)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int target_;
    bool odd_;
    std::vector<int> path_;
};

} // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int target_length) {
    if (target_length != 0 && (target_length < 5 || target_length % 2 == 0))
        throw input_error("odd hole length must be odd and >= 5");
    return HoleSearch(g, target_length, true).run();
}

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
    if (p.kind == Pattern::Kind::odd_hole) {
        auto hole = find_odd_hole(g);
        if (!hole) return std::nullopt;
        return Embedding{p, *hole};
    }
    if (p.kind == Pattern::Kind::odd_antihole) {
        auto hole = find_odd_hole(g.complement());
        if (!hole) return std::nullopt;
        return Embedding{p, *hole};
    }
    Graph shape = p.shape();
    auto image = InducedSearch(g, shape).run();
    if (!image) return std::nullopt;
    return Embedding{p, *image};
}

bool is_perfect(const Graph& g, int size_limit) {
    if (g.vertex_count() > size_limit)
        throw size_limit_error("perfection check limited to " + std::to_string(size_limit) +
                               " vertices, got " + std::to_string(g.vertex_count()));
    if (find_odd_hole(g)) return false;
    if (find_odd_hole(g.complement())) return false;
    return true;
}

std::string class_name(GraphClass c) {
    switch (c) {
    case GraphClass::kp: return "kp";
    case GraphClass::diamond: return "diamond";
    case GraphClass::paw: return "paw";
    case GraphClass::bull: return "bull";
    }
    return "?";
}

GraphClass class_from_name(const std::string& name) {
    if (name == "kp") return GraphClass::kp;
    if (name == "diamond") return GraphClass::diamond;
    if (name == "paw") return GraphClass::paw;
    if (name == "bull") return GraphClass::bull;
    throw input_error("unknown class name: " + name);
}

const std::vector<Pattern>& class_forbidden_patterns(GraphClass c) {
    static const std::vector<Pattern> kp = {Pattern::path(7), Pattern::hole(5), Pattern::kite(),
                                            Pattern::paraglider()};
    static const std::vector<Pattern> diamond = {Pattern::path(7), Pattern::hole(5),
                                                 Pattern::diamond()};
    static const std::vector<Pattern> paw = {Pattern::path(7), Pattern::hole(5), Pattern::paw()};
    static const std::vector<Pattern> bull = {Pattern::path(7), Pattern::hole(5), Pattern::bull()};
    switch (c) {
    case GraphClass::kp: return kp;
    case GraphClass::diamond: return diamond;
    case GraphClass::paw: return paw;
    case GraphClass::bull: return bull;
    }
    return kp;
}

ClassMembership class_membership(const Graph& g, GraphClass c) {
    for (const Pattern& p : class_forbidden_patterns(c))
        if (auto hit = find_induced(g, p)) return {false, hit};
    return {true, std::nullopt};
}

} // namespace p7c5
