#include "p7c5/hole_structure.hpp"

#include <algorithm>
#include <sstream>

#include "p7c5/decompose.hpp"
#include "p7c5/patterns.hpp"

namespace p7c5 {

namespace {

bool is_induced_seven_cycle(const Graph& g, const HoleTuple& hole) {
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            if (hole[i] == hole[j]) return false;
            bool consecutive = (j - i == 1) || (i == 0 && j == 6);
            if (g.adjacent(hole[i], hole[j]) != consecutive) return false;
        }
    return true;
}

// Bitmask over positions 1..7 of the hole vertices adjacent to x.
int hole_mask(const Graph& g, const HoleTuple& hole, int x) {
    int mask = 0;
    for (int p = 0; p < 7; ++p)
        if (g.adjacent(x, hole[p])) mask |= 1 << p;
    return mask;
}

int mask_of_positions(std::initializer_list<int> positions) {
    int mask = 0;
    for (int p : positions) mask |= 1 << (hole_index(p) - 1);
    return mask;
}

} // namespace

VertexSet HoleAttachment::a_union() const {
    VertexSet s = a[1];
    for (int i = 2; i <= 7; ++i) s |= a[i];
    return s;
}
VertexSet HoleAttachment::b_union() const {
    VertexSet s = b[1];
    for (int i = 2; i <= 7; ++i) s |= b[i];
    return s;
}
VertexSet HoleAttachment::bbar_union() const {
    VertexSet s = bbar[1];
    for (int i = 2; i <= 7; ++i) s |= bbar[i];
    return s;
}
VertexSet HoleAttachment::d_union() const {
    VertexSet s = d[1];
    for (int i = 2; i <= 7; ++i) s |= d[i];
    return s;
}

std::string MViolation::to_line() const {
    std::ostringstream out;
    out << 'M' << property_id << ':';
    for (int v : witness) out << ' ' << v;
    return out.str();
}

std::optional<HoleTuple> find_seven_hole(const Graph& g) {
    auto cyc = find_odd_hole(g, 7);
    if (!cyc) return std::nullopt;
    HoleTuple hole{};
    std::copy(cyc->begin(), cyc->end(), hole.begin());
    return hole;
}

std::vector<HoleTuple> enumerate_seven_holes(const Graph& g) {
    std::vector<HoleTuple> out;
    int n = g.vertex_count();
    if (n < 7) return out;
    // Walk all induced 7-cycles anchored at their minimum vertex with the
    // second vertex smaller than the last; that fixes order and direction.
    std::vector<int> path;
    VertexSet on_path(n);

    auto dfs = [&](auto&& self, const VertexSet& blocked) -> void {
        int s = path.front();
        int last = path.back();
        VertexSet cand = g.neighbors(last);
        cand -= blocked;
        if (path.size() == 6) {
            VertexSet closers = cand & g.neighbors(s);
            for (int w = closers.next(s + 1); w >= 0; w = closers.next(w + 1)) {
                if (on_path.test(w) || path[1] > w) continue;
                HoleTuple hole{};
                for (int i = 0; i < 6; ++i) hole[i] = path[i];
                hole[6] = w;
                out.push_back(hole);
            }
            return;
        }
        VertexSet ext = cand;
        if (path.size() >= 2) ext -= g.neighbors(s);
        for (int w = ext.next(s + 1); w >= 0; w = ext.next(w + 1)) {
            VertexSet next_blocked = blocked;
            if (path.size() >= 2) {
                next_blocked |= g.neighbors(last);
                next_blocked.set(last);
            }
            path.push_back(w);
            on_path.set(w);
            self(self, next_blocked);
            on_path.reset(w);
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path.clear();
        on_path.set(s);
        dfs(dfs, VertexSet(n));
        on_path.reset(s);
    }
    return out;
}

HoleAttachment compute_attachments(const Graph& g, const HoleTuple& hole) {
    if (!is_induced_seven_cycle(g, hole)) throw input_error("tuple is not an induced 7-hole");
    int n = g.vertex_count();
    HoleAttachment att;
    att.hole = hole;
    for (int i = 1; i <= 7; ++i) {
        att.a[i] = VertexSet(n);
        att.b[i] = VertexSet(n);
        att.bbar[i] = VertexSet(n);
        att.d[i] = VertexSet(n);
    }
    att.inner = VertexSet(n);
    att.far = VertexSet(n);
    att.spill = VertexSet(n);

    VertexSet on_hole(n);
    for (int v : hole) on_hole.set(v);

    for (int x = 0; x < n; ++x) {
        if (on_hole.test(x)) continue;
        int mask = hole_mask(g, hole, x);
        if (mask == 0) {
            att.far.set(x);
            continue;
        }
        if (mask == 0x7f) {
            att.inner.set(x);
            continue;
        }
        bool placed = false;
        for (int i = 1; i <= 7 && !placed; ++i) {
            if (mask == mask_of_positions({i, i + 2})) {
                att.a[i].set(x);
                placed = true;
            } else if (mask == mask_of_positions({i, i + 2, i + 3})) {
                att.b[i].set(x);
                placed = true;
            } else if (mask == mask_of_positions({i, i + 1, i + 3})) {
                att.bbar[i].set(x);
                placed = true;
            } else if (mask == mask_of_positions({i, i + 2, i + 3, i + 5})) {
                att.d[i].set(x);
                placed = true;
            }
        }
        if (!placed) att.spill.set(x);
    }
    return att;
}

XYZAttachment compute_xyz(const Graph& g, const HoleTuple& hole) {
    if (!is_induced_seven_cycle(g, hole)) throw input_error("tuple is not an induced 7-hole");
    int n = g.vertex_count();
    XYZAttachment att;
    att.hole = hole;
    for (int i = 1; i <= 7; ++i) {
        att.x[i] = VertexSet(n);
        att.y[i] = VertexSet(n);
    }
    att.center = VertexSet(n);
    att.far = VertexSet(n);
    att.spill = VertexSet(n);

    VertexSet on_hole(n);
    for (int v : hole) on_hole.set(v);

    for (int v = 0; v < n; ++v) {
        if (on_hole.test(v)) continue;
        int mask = hole_mask(g, hole, v);
        if (mask == 0) {
            att.far.set(v);
            continue;
        }
        if (mask == 0x7f) {
            att.center.set(v);
            continue;
        }
        bool placed = false;
        for (int i = 1; i <= 7 && !placed; ++i) {
            if (mask == mask_of_positions({i, i + 2})) {
                att.x[i].set(v);
                placed = true;
            } else if (mask == mask_of_positions({i, i + 1, i + 2})) {
                att.y[i].set(v);
                placed = true;
            }
        }
        if (!placed) att.spill.set(v);
    }
    return att;
}

namespace {

class MChecker {
public:
    MChecker(const Graph& g, const HoleAttachment& att, bool has_comparable_pair)
        : g_(g), att_(att), has_cp_(has_comparable_pair) {}

    std::vector<MViolation> run() {
        for (int i = 1; i <= 7; ++i) {
            m1(i); m2(i); m3(i); m4(i); m5(i);
            m6(i); m7(i); m8(i); m9(i); m10(i);
            m11(i); m12(i); m13(i); m14(i); m15(i);
            m16(i); m17(i); m18(i); m19(i); m20(i);
            m21(i); m22(i); m23(i); m24(i); m25(i);
            m26(i);
        }
        return std::move(violations_);
    }

private:
    const VertexSet& a(int i) const { return att_.a[hole_index(i)]; }
    const VertexSet& b(int i) const { return att_.b[hole_index(i)]; }
    const VertexSet& bbar(int i) const { return att_.bbar[hole_index(i)]; }
    const VertexSet& d(int i) const { return att_.d[hole_index(i)]; }
    int hv(int i) const { return att_.hole[hole_index(i) - 1]; }

    void report(int id, std::vector<int> witness, std::string detail) {
        violations_.push_back({id, std::move(witness), std::move(detail)});
    }

    // First edge between two sets, if any.
    std::optional<std::pair<int, int>> edge_between(const VertexSet& p, const VertexSet& q) {
        for (int u = p.first(); u >= 0; u = p.next(u + 1)) {
            VertexSet hit = g_.neighbors(u) & q;
            int v = hit.first();
            if (v >= 0) return std::make_pair(u, v);
        }
        return std::nullopt;
    }
    // First missing edge between two disjoint sets, if any.
    std::optional<std::pair<int, int>> nonedge_between(const VertexSet& p, const VertexSet& q) {
        for (int u = p.first(); u >= 0; u = p.next(u + 1)) {
            VertexSet miss = q - g_.neighbors(u);
            int v = miss.first();
            if (v >= 0) return std::make_pair(u, v);
        }
        return std::nullopt;
    }

    void require_anticomplete(int id, const VertexSet& p, const VertexSet& q, const char* what) {
        if (auto e = edge_between(p, q)) report(id, {e->first, e->second}, what);
    }
    void require_complete(int id, const VertexSet& p, const VertexSet& q, const char* what) {
        if (auto e = nonedge_between(p, q)) report(id, {e->first, e->second}, what);
    }
    void require_one_empty(int id, const VertexSet& p, const VertexSet& q, const char* what) {
        if (!p.empty() && !q.empty()) report(id, {p.first(), q.first()}, what);
    }

    void m1(int i) {
        if (auto e = edge_between(a(i), a(i))) report(1, {e->first, e->second}, "A_i not stable");
        require_anticomplete(1, a(i), att_.far, "A vertex with neighbor in R");
    }
    void m2(int i) {
        auto check = [&](const VertexSet& s, const char* name) {
            if (s.count() > 1) {
                int u = s.first();
                report(2, {u, s.next(u + 1)}, name);
            }
        };
        check(b(i), "|B_i| > 1");
        check(bbar(i), "|Bbar_i| > 1");
        check(d(i), "|D_i| > 1");
    }
    void m3(int i) { require_complete(3, a(i), a(i + 1), "A_i not complete to A_{i+1}"); }
    void m4(int i) { require_anticomplete(4, a(i), a(i + 3), "A_i not anticomplete to A_{i+3}"); }
    void m5(int i) {
        // Matching between A_i and A_{i+2}: no vertex on either side with
        // two neighbors across.
        auto side = [&](const VertexSet& p, const VertexSet& q) {
            for (int u = p.first(); u >= 0; u = p.next(u + 1)) {
                VertexSet hit = g_.neighbors(u) & q;
                if (hit.count() >= 2) {
                    int v1 = hit.first();
                    report(5, {u, v1, hit.next(v1 + 1)}, "edges A_i..A_{i+2} not a matching");
                    return;
                }
            }
        };
        side(a(i), a(i + 2));
        side(a(i + 2), a(i));
    }
    void m6(int i) {
        for (int k : {1, 3, 4, 6})
            require_one_empty(6, b(i), b(i + k), "B_i and a clashing B class both nonempty");
    }
    void m7(int i) {
        require_anticomplete(7, b(i), b(i + 2), "B_i not anticomplete to B_{i+2}");
    }
    void m8(int i) {
        for (int k = 1; k <= 6; ++k)
            require_one_empty(8, d(i), d(i + k), "two distinct D classes nonempty");
    }
    void m9(int i) {
        for (int k : {0, 2, 4, 5})
            require_anticomplete(9, a(i), b(i + k), "A_i not anticomplete to clashing B class");
    }
    void m10(int i) { require_complete(10, a(i), b(i + 1), "A_i not complete to B_{i+1}"); }
    void m11(int i) { require_one_empty(11, a(i), b(i + 6), "A_i and B_{i+6} both nonempty"); }
    void m12(int i) {
        for (int k : {0, 2, 4})
            require_anticomplete(12, a(i), d(i + k), "A_i not anticomplete to clashing D class");
    }
    void m13(int i) {
        for (int k : {5, 6})
            require_one_empty(13, a(i), d(i + k), "A_i and a clashing D class both nonempty");
    }
    void m14(int i) { require_anticomplete(14, b(i), d(i + 5), "B_i not anticomplete to D_{i+5}"); }
    void m15(int i) {
        for (int k = 0; k <= 6; ++k) {
            if (k == 5) continue;
            require_one_empty(15, b(i), d(i + k), "B_i nonempty but D not confined to D_{i+5}");
        }
    }
    void m16(int i) {
        for (int k : {1, 3, 4, 6})
            require_one_empty(16, bbar(i), bbar(i + k), "Bbar_i and a clashing Bbar class nonempty");
    }
    void m17(int i) {
        require_anticomplete(17, bbar(i), bbar(i + 2), "Bbar_i not anticomplete to Bbar_{i+2}");
    }
    void m18(int i) {
        for (int k : {1, 2, 4, 6})
            require_anticomplete(18, a(i), bbar(i + k), "A_i not anticomplete to clashing Bbar");
    }
    void m19(int i) { require_complete(19, a(i), bbar(i + 5), "A_i not complete to Bbar_{i+5}"); }
    void m20(int i) { require_one_empty(20, a(i), bbar(i), "A_i and Bbar_i both nonempty"); }
    void m21(int i) { require_anticomplete(21, bbar(i), d(i), "Bbar_i not anticomplete to D_i"); }
    void m22(int i) {
        for (int k = 1; k <= 6; ++k)
            require_one_empty(22, bbar(i), d(i + k), "Bbar_i nonempty but D not confined to D_i");
    }
    void m23(int i) {
        for (int k : {0, 1, 2, 6})
            require_anticomplete(23, bbar(i), b(i + k), "Bbar_i not anticomplete to clashing B");
    }
    void m24(int i) { require_complete(24, bbar(i), b(i + 3), "Bbar_i not complete to B_{i+3}"); }
    void m25(int i) {
        for (int k : {4, 5})
            require_one_empty(25, bbar(i), b(i + k), "Bbar_i and a clashing B class nonempty");
    }
    void m26(int i) {
        if (has_cp_) return; // hypothesis "no comparable pair" not met
        int vi = hv(i);
        VertexSet allowed = att_.a_union();
        for (int v : att_.hole) allowed.set(v);
        if (!g_.neighbors(vi).subset_of(allowed)) return;
        const VertexSet& prev = a(i - 1);
        if (!prev.empty())
            report(26, {vi, prev.first()}, "N(v_i) inside A u L but A_{i-1} nonempty");
    }

    const Graph& g_;
    const HoleAttachment& att_;
    bool has_cp_;
    std::vector<MViolation> violations_;
};

} // namespace

std::vector<MViolation> check_m_properties(const Graph& g, const HoleAttachment& att,
                                           bool graph_has_comparable_pair) {
    return MChecker(g, att, graph_has_comparable_pair).run();
}

std::vector<MViolation> check_m_properties(const Graph& g, const HoleAttachment& att) {
    return check_m_properties(g, att, find_comparable_pair(g).has_value());
}

CenterAnticenter find_center_anticenter(const Graph& g, const VertexSet& h) {
    int n = g.vertex_count();
    if (h.universe_size() != n) throw input_error("vertex set belongs to a different graph");
    CenterAnticenter out{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        if (h.test(v)) continue;
        if (g.is_complete_to(v, h)) out.centers.set(v);
        if (g.is_anticomplete_to(v, h)) out.anticenters.set(v);
    }
    return out;
}

} // namespace p7c5
