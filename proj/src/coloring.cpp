#include "p7c5/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "p7c5/decompose.hpp"
#include "p7c5/families.hpp"
#include "p7c5/isomorphism.hpp"

namespace p7c5 {

bool Coloring::proper(const Graph& g) const {
    if ((int)assignment.size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (assignment[u] < 0 || assignment[u] == assignment[v]) return false;
    return true;
}

namespace {

int count_colors(const std::vector<int>& assignment) {
    int k = 0;
    for (int c : assignment) k = std::max(k, c + 1);
    return k;
}

// Greedy coloring bound for the clique search: candidates are grouped into
// color classes; a candidate in class c can extend the clique to at most
// size + c + 1, so classes are processed in reverse.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g), n_(g.vertex_count()), best_(n_) {}

    CliqueResult run() {
        if (n_ == 0) return {0, VertexSet(0)};
        current_ = VertexSet(n_);
        expand(VertexSet::full(n_));
        return {best_size_, best_};
    }

private:
    void expand(const VertexSet& cand) {
        if (cand.empty()) {
            if (current_.count() > best_size_) {
                best_size_ = current_.count();
                best_ = current_;
            }
            return;
        }
        // Greedy color classes over the candidates.
        std::vector<int> verts = cand.to_vector();
        std::vector<int> color(verts.size());
        std::vector<VertexSet> classes;
        for (size_t i = 0; i < verts.size(); ++i) {
            size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g_.neighbors(verts[i]))) ++c;
            if (c == classes.size()) classes.push_back(VertexSet(n_));
            classes[c].set(verts[i]);
            color[i] = (int)c;
        }
        int base = current_.count();
        // Reverse order of color classes, highest first.
        std::vector<size_t> order(verts.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return color[a] > color[b]; });
        VertexSet remaining = cand;
        for (size_t idx : order) {
            int v = verts[idx];
            if (!remaining.test(v)) continue;
            if (base + color[idx] + 1 <= best_size_) return;
            current_.set(v);
            expand(remaining & g_.neighbors(v));
            current_.reset(v);
            remaining.reset(v);
        }
    }

    const Graph& g_;
    int n_;
    VertexSet best_;
    VertexSet current_;
    int best_size_ = 0;
};

// Saturation-driven backtracking k-colorability, with canonical color-order
// symmetry breaking.
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k) {}

    std::optional<std::vector<int>> run() {
        assign_.assign(n_, -1);
        if (dfs(0, 0)) return assign_;
        return std::nullopt;
    }

private:
    bool dfs(int colored, int used) {
        if (colored == n_) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (assign_[v] >= 0) continue;
            int sat = saturation(v);
            if (sat > pick_sat || (sat == pick_sat && g_.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g_.degree(v);
            }
        }
        int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            g_.neighbors(pick).for_each([&](int u) {
                if (assign_[u] == c) ok = false;
            });
            if (!ok) continue;
            assign_[pick] = c;
            if (dfs(colored + 1, std::max(used, c + 1))) return true;
            assign_[pick] = -1;
        }
        return false;
    }

    int saturation(int v) const {
        uint64_t seen = 0;
        g_.neighbors(v).for_each([&](int u) {
            if (assign_[u] >= 0) seen |= uint64_t{1} << (assign_[u] & 63);
        });
        return std::popcount(seen);
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> assign_;
};

std::vector<int> dsatur_greedy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> assign(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (assign[v] >= 0) continue;
            uint64_t seen = 0;
            g.neighbors(v).for_each([&](int u) {
                if (assign[u] >= 0) seen |= uint64_t{1} << (assign[u] & 63);
            });
            int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        int c = 0;
        while (true) {
            bool ok = true;
            g.neighbors(pick).for_each([&](int u) {
                if (assign[u] == c) ok = false;
            });
            if (ok) break;
            ++c;
        }
        assign[pick] = c;
    }
    return assign;
}

} // namespace

CliqueResult max_clique(const Graph& g) { return CliqueSearch(g).run(); }

ChromaticResult exact_chromatic(const Graph& g, int size_limit) {
    if (g.vertex_count() > size_limit)
        throw size_limit_error("exact coloring limited to " + std::to_string(size_limit) +
                               " vertices, got " + std::to_string(g.vertex_count()));
    ChromaticResult out;
    if (g.vertex_count() == 0) return out;
    int lb = max_clique(g).omega;
    std::vector<int> greedy = dsatur_greedy(g);
    int ub = count_colors(greedy);
    std::vector<int> best = greedy;
    for (int k = lb; k < ub; ++k) {
        if (auto hit = KColorSearch(g, k).run()) {
            best = *hit;
            ub = k;
            break;
        }
    }
    out.chi = ub;
    out.coloring.assignment = best;
    out.coloring.colors_used = ub;
    return out;
}

int class_color_bound(GraphClass c, int omega) {
    switch (c) {
    case GraphClass::kp: return omega + 1;
    case GraphClass::diamond:
    case GraphClass::paw: return std::max(3, omega);
    case GraphClass::bull: return (omega + 1) * omega / 2;
    }
    return omega + 1;
}

namespace {

// Recursive pipeline state shared across one structural_color call.
class StructuralPipeline {
public:
    StructuralPipeline(GraphClass cls, int exact_limit, int perfection_limit)
        : cls_(cls), exact_limit_(exact_limit), perf_limit_(perfection_limit) {}

    Coloring run(const Graph& g) {
        std::vector<int> ids(g.vertex_count());
        std::iota(ids.begin(), ids.end(), 0);
        Coloring out;
        out.assignment = colorize(g, ids);
        out.colors_used = count_colors(out.assignment);
        out.trace = std::move(trace_);
        return out;
    }

private:
    std::vector<int> original(const std::vector<int>& ids, const VertexSet& s) const {
        std::vector<int> out;
        s.for_each([&](int v) { out.push_back(ids[v]); });
        return out;
    }

    std::vector<int> colorize(const Graph& g, const std::vector<int>& ids) {
        int n = g.vertex_count();
        if (n == 0) return {};

        auto stats = g.basic_stats();
        if (stats.components.size() > 1) {
            trace_.push_back({ReductionStep::Kind::split_components, {}, ""});
            std::vector<int> colors(n, -1);
            for (const VertexSet& comp : stats.components) {
                auto sub = g.induced(comp);
                std::vector<int> sub_ids(sub.original.size());
                for (size_t i = 0; i < sub.original.size(); ++i) sub_ids[i] = ids[sub.original[i]];
                auto sub_colors = colorize(sub.graph, sub_ids);
                for (size_t i = 0; i < sub.original.size(); ++i)
                    colors[sub.original[i]] = sub_colors[i];
            }
            return colors;
        }

        if (auto cp = find_comparable_pair(g)) {
            auto [u, v] = *cp;
            trace_.push_back({ReductionStep::Kind::remove_comparable, {ids[u], ids[v]}, ""});
            VertexSet keep = g.all_vertices();
            keep.reset(u);
            auto sub = g.induced(keep);
            std::vector<int> sub_ids;
            for (int orig : sub.original) sub_ids.push_back(ids[orig]);
            auto sub_colors = colorize(sub.graph, sub_ids);
            std::vector<int> colors(n, -1);
            for (size_t i = 0; i < sub.original.size(); ++i) colors[sub.original[i]] = sub_colors[i];
            colors[u] = lowest_free(g, colors, u);
            return colors;
        }

        if (auto uc = find_universal_clique(g)) {
            trace_.push_back(
                {ReductionStep::Kind::extract_universal_clique, original(ids, *uc), ""});
            VertexSet rest = g.all_vertices();
            rest -= *uc;
            auto sub = g.induced(rest);
            std::vector<int> sub_ids;
            for (int orig : sub.original) sub_ids.push_back(ids[orig]);
            auto sub_colors = colorize(sub.graph, sub_ids);
            std::vector<int> colors(n, -1);
            for (size_t i = 0; i < sub.original.size(); ++i) colors[sub.original[i]] = sub_colors[i];
            int next = count_colors(sub_colors);
            uc->for_each([&](int v) { colors[v] = next++; });
            return colors;
        }

        if (auto cut = find_clique_cutset(g)) {
            trace_.push_back({ReductionStep::Kind::split_clique_cutset, original(ids, *cut), ""});
            return color_around_cutset(g, ids, *cut);
        }

        if (n <= perf_limit_ && is_perfect(g, perf_limit_)) {
            trace_.push_back(
                {ReductionStep::Kind::base_perfect, original(ids, g.all_vertices()), ""});
            auto exact = exact_chromatic(g, exact_limit_);
            if (exact.chi != max_clique(g).omega)
                throw structure_error("exact solver disagrees with perfection");
            return exact.coloring.assignment;
        }

        if (auto colors = try_family_base(g, ids)) return *colors;
        if (auto colors = try_blowup_base(g, ids)) return *colors;

        // A vertex of degree below the class bound can be set aside and
        // colored greedily afterwards; this is what makes the recursion
        // total on graphs whose minimum degree falls under the structure
        // theorems' thresholds.
        int omega = max_clique(g).omega;
        int bound = class_color_bound(cls_, omega);
        int v_low = -1;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= bound - 1 && (v_low < 0 || g.degree(v) < g.degree(v_low))) v_low = v;
        if (v_low >= 0) {
            trace_.push_back({ReductionStep::Kind::remove_low_degree, {ids[v_low]}, ""});
            VertexSet keep = g.all_vertices();
            keep.reset(v_low);
            auto sub = g.induced(keep);
            std::vector<int> sub_ids;
            for (int orig : sub.original) sub_ids.push_back(ids[orig]);
            auto sub_colors = colorize(sub.graph, sub_ids);
            std::vector<int> colors(n, -1);
            for (size_t i = 0; i < sub.original.size(); ++i) colors[sub.original[i]] = sub_colors[i];
            colors[v_low] = lowest_free(g, colors, v_low);
            return colors;
        }

        // Irreducible and matching no base case.  If the graph is not in
        // the class, say so with a witness; otherwise this run found a
        // counterexample to the structure theorems.
        auto membership = class_membership(g, cls_);
        if (!membership.member) {
            std::string witness = membership.witness->pattern.name() + " at";
            for (int v : membership.witness->image) witness += " " + std::to_string(ids[v]);
            throw input_error("graph is outside the " + class_name(cls_) +
                              " class: induced " + witness);
        }
        throw structure_error("structure theorem violation: irreducible " + class_name(cls_) +
                              "-class piece matches no base case");
    }

    static int lowest_free(const Graph& g, const std::vector<int>& colors, int v) {
        std::vector<bool> used(g.degree(v) + 1, false);
        g.neighbors(v).for_each([&](int u) {
            if (colors[u] >= 0 && colors[u] < (int)used.size()) used[colors[u]] = true;
        });
        int c = 0;
        while (used[c]) ++c; // at most degree colors are blocked
        return c;
    }

    std::vector<int> color_around_cutset(const Graph& g, const std::vector<int>& ids,
                                         const VertexSet& cut) {
        int n = g.vertex_count();
        auto comps = [&] {
            VertexSet rest = g.all_vertices();
            rest -= cut;
            auto sub = g.induced(rest);
            std::vector<VertexSet> out;
            for (const VertexSet& c : sub.graph.basic_stats().components) {
                VertexSet lifted(n);
                c.for_each([&](int v) { lifted.set(sub.original[v]); });
                out.push_back(lifted);
            }
            return out;
        }();

        std::vector<int> colors(n, -1);
        std::vector<int> cut_vertices = cut.to_vector();
        bool first = true;
        int palette = 0;
        for (const VertexSet& comp : comps) {
            VertexSet piece_set = comp;
            piece_set |= cut;
            auto piece = g.induced(piece_set);
            std::vector<int> piece_ids;
            for (int orig : piece.original) piece_ids.push_back(ids[orig]);
            auto piece_colors = colorize(piece.graph, piece_ids);

            if (first) {
                for (size_t i = 0; i < piece.original.size(); ++i)
                    colors[piece.original[i]] = piece_colors[i];
                palette = count_colors(piece_colors);
                first = false;
                continue;
            }
            // Remap piece colors so the shared clique keeps its colors.
            int piece_palette = count_colors(piece_colors);
            std::vector<int> remap(piece_palette, -1);
            std::vector<bool> taken((size_t)palette + piece_palette + cut_vertices.size(), false);
            for (size_t i = 0; i < piece.original.size(); ++i) {
                int orig = piece.original[i];
                if (cut.test(orig)) {
                    remap[piece_colors[i]] = colors[orig];
                    taken[colors[orig]] = true;
                }
            }
            int next = 0;
            for (int c = 0; c < piece_palette; ++c) {
                if (remap[c] >= 0) continue;
                while (next < (int)taken.size() && taken[next]) ++next;
                remap[c] = next;
                taken[next] = true;
            }
            for (size_t i = 0; i < piece.original.size(); ++i) {
                int orig = piece.original[i];
                int mapped = remap[piece_colors[i]];
                if (colors[orig] >= 0 && colors[orig] != mapped && !cut.test(orig))
                    throw structure_error("cutset merge collision");
                colors[orig] = mapped;
            }
        }
        return colors;
    }

    std::optional<std::vector<int>> try_family_base(const Graph& g, const std::vector<int>& ids) {
        if (cls_ == GraphClass::paw) return std::nullopt;
        auto spec = classify_family(g);
        if (!spec) return std::nullopt;
        // The stored coloring is for the generator's labeling; transport it
        // through an isomorphism.
        Graph canon = generate_family(*spec);
        auto map = find_isomorphism(g, canon);
        if (!map) return std::nullopt;
        auto ref = family_reference_coloring(*spec);
        std::vector<int> colors(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) colors[v] = ref[(*map)[v]];
        trace_.push_back({ReductionStep::Kind::base_family, original(ids, g.all_vertices()),
                          spec->to_string()});
        return colors;
    }

    std::optional<std::vector<int>> try_blowup_base(const Graph& g, const std::vector<int>& ids) {
        static const int seven_cycle_coloring[7] = {0, 1, 0, 1, 0, 1, 2};
        // Stable blowup: bag-level 3-coloring through the twin quotient.
        {
            auto tq = twin_quotient(g);
            if (tq.quotient.vertex_count() == 7) {
                if (auto map = find_isomorphism(tq.quotient, Graph::cycle(7))) {
                    std::vector<int> colors(g.vertex_count());
                    for (int v = 0; v < g.vertex_count(); ++v)
                        colors[v] = seven_cycle_coloring[(*map)[tq.class_of[v]]];
                    std::string sizes = blowup_label(tq);
                    trace_.push_back({ReductionStep::Kind::base_blowup,
                                      original(ids, g.all_vertices()), "stable " + sizes});
                    return colors;
                }
            }
        }
        // Clique blowup: exact coloring (these appear only on demand, e.g.
        // when coloring the tightness witnesses).
        {
            auto tq = true_twin_quotient(g);
            if (tq.quotient.vertex_count() == 7 &&
                are_isomorphic(tq.quotient, Graph::cycle(7))) {
                auto exact = exact_chromatic(g, exact_limit_);
                trace_.push_back({ReductionStep::Kind::base_blowup,
                                  original(ids, g.all_vertices()),
                                  "clique " + blowup_label(tq)});
                return exact.coloring.assignment;
            }
        }
        return std::nullopt;
    }

    static std::string blowup_label(const TwinQuotient& tq) {
        std::string out = "(";
        for (size_t i = 0; i < tq.classes.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(tq.classes[i].count());
        }
        return out + ")";
    }

    GraphClass cls_;
    int exact_limit_;
    int perf_limit_;
    ReductionTrace trace_;
};

} // namespace

Coloring structural_color(const Graph& g, GraphClass cls, int exact_limit, int perfection_limit) {
    if (cls == GraphClass::bull)
        throw input_error("use divisible_color for the bull class");
    Coloring out = StructuralPipeline(cls, exact_limit, perfection_limit).run(g);
    if (!out.proper(g)) throw structure_error("structural coloring is not proper");
    return out;
}

DivisiblePartition divisible_partition(const Graph& g, int perfection_limit) {
    int n = g.vertex_count();
    if (n > perfection_limit)
        throw size_limit_error("divisible partition needs the perfection oracle; graph too large");
    DivisiblePartition out{VertexSet(n), VertexSet(n), std::nullopt, std::nullopt};
    int omega = max_clique(g).omega;

    auto stats = g.basic_stats();
    if (stats.components.size() > 1) {
        for (const VertexSet& comp : stats.components) {
            auto sub = g.induced(comp);
            if (max_clique(sub.graph).omega < omega) {
                out.rest |= comp; // whole component already has smaller cliques
                continue;
            }
            auto part = divisible_partition(sub.graph, perfection_limit);
            part.perfect_part.for_each([&](int v) { out.perfect_part.set(sub.original[v]); });
            part.rest.for_each([&](int v) { out.rest.set(sub.original[v]); });
        }
        return out;
    }

    // A perfect graph is its own perfect part; one exact step colors it.
    if (is_perfect(g, perfection_limit)) {
        out.perfect_part = g.all_vertices();
        return out;
    }

    // Preferred move: some vertex whose non-neighborhood induces a perfect
    // graph; then {v} u M(v) is perfect and N(v) has smaller cliques.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int v : order) {
        VertexSet p = g.non_neighbors(v);
        p.set(v);
        auto sub = g.induced(p);
        if (!is_perfect(sub.graph, perfection_limit)) continue;
        out.perfect_part = p;
        out.rest = g.neighbors(v);
        out.pivot = v;
        return out;
    }

    // Fallback: contract a homogeneous set and combine the two smaller
    // partitions.  Substituting a perfect graph for a vertex of a perfect
    // graph keeps it perfect, which is what makes the lifted part work.
    auto hom = find_homogeneous_set(g);
    if (!hom)
        throw structure_error("no perfect partition and no homogeneous set; this contradicts "
                              "perfect divisibility of the class");
    int rep = hom->first();
    VertexSet contracted = g.all_vertices();
    contracted -= *hom;
    contracted.set(rep);
    auto outer = g.induced(contracted);
    auto outer_part = divisible_partition(outer.graph, perfection_limit);

    VertexSet p(n), rest(n);
    bool rep_in_perfect = false;
    for (size_t i = 0; i < outer.original.size(); ++i) {
        if (outer_part.perfect_part.test((int)i)) {
            if (outer.original[i] == rep)
                rep_in_perfect = true;
            else
                p.set(outer.original[i]);
        } else if (outer.original[i] != rep) {
            rest.set(outer.original[i]);
        }
    }
    if (rep_in_perfect) {
        auto inner = g.induced(*hom);
        auto inner_part = divisible_partition(inner.graph, perfection_limit);
        for (size_t i = 0; i < inner.original.size(); ++i) {
            if (inner_part.perfect_part.test((int)i))
                p.set(inner.original[i]);
            else
                rest.set(inner.original[i]);
        }
    } else {
        hom->for_each([&](int v) { rest.set(v); });
    }
    out.perfect_part = p;
    out.rest = rest;
    out.homogeneous = *hom;

    auto check = g.induced(p);
    if (!is_perfect(check.graph, perfection_limit))
        throw structure_error("lifted partition is not perfect");
    auto rest_sub = g.induced(rest);
    if (max_clique(rest_sub.graph).omega >= omega)
        throw structure_error("lifted partition did not reduce the clique number");
    return out;
}

namespace {

void divisible_color_rec(const Graph& g, const std::vector<int>& ids, int perfection_limit,
                         int exact_limit, int offset, std::vector<int>& colors,
                         ReductionTrace& trace) {
    int n = g.vertex_count();
    if (n == 0) return;
    if (g.edge_count() == 0) {
        for (int v = 0; v < n; ++v) colors[ids[v]] = offset;
        return;
    }
    auto part = divisible_partition(g, perfection_limit);
    if (part.homogeneous) {
        std::vector<int> hom;
        part.homogeneous->for_each([&](int v) { hom.push_back(ids[v]); });
        trace.push_back({ReductionStep::Kind::contract_homogeneous, hom, ""});
    }

    auto psub = g.induced(part.perfect_part);
    auto exact = exact_chromatic(psub.graph, std::max(exact_limit, perfection_limit));
    for (size_t i = 0; i < psub.original.size(); ++i)
        colors[ids[psub.original[i]]] = offset + exact.coloring.assignment[i];
    std::vector<int> porig;
    for (int v : psub.original) porig.push_back(ids[v]);
    trace.push_back({ReductionStep::Kind::base_perfect, porig, ""});

    auto rsub = g.induced(part.rest);
    std::vector<int> rest_ids;
    for (int v : rsub.original) rest_ids.push_back(ids[v]);
    divisible_color_rec(rsub.graph, rest_ids, perfection_limit, exact_limit,
                        offset + exact.chi, colors, trace);
}

} // namespace

Coloring divisible_color(const Graph& g, int perfection_limit, int exact_limit) {
    int n = g.vertex_count();
    if (n > perfection_limit)
        throw size_limit_error("divisible coloring limited to the perfection cap of " +
                               std::to_string(perfection_limit) + " vertices");
    Coloring out;
    out.assignment.assign(n, -1);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    divisible_color_rec(g, ids, perfection_limit, exact_limit, 0, out.assignment, out.trace);
    out.colors_used = count_colors(out.assignment);
    if (!out.proper(g)) throw structure_error("divisible coloring is not proper");
    return out;
}

} // namespace p7c5
