#include "p7c5/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "p7c5/family_data.hpp"
#include "p7c5/isomorphism.hpp"

namespace p7c5 {

namespace {

const std::map<std::string, Graph>& fixed_family_tables() {
    static const std::map<std::string, Graph> tables = [] {
        std::map<std::string, Graph> out;
        std::istringstream in(family_data_text);
        std::string line;
        std::string name;
        int n = 0, m = 0, seen = 0;
        std::vector<Edge> edges;
        auto flush = [&]() {
            if (name.empty()) return;
            if (seen != m) throw input_error("family data: " + name + " edge count mismatch");
            out.emplace(name, Graph::build(n, edges));
            name.clear();
            edges.clear();
        };
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string word;
            ls >> word;
            if (word == "family") {
                flush();
                if (!(ls >> name >> n >> m)) throw input_error("family data: bad record header");
                seen = 0;
            } else {
                int u = std::stoi(word), v = 0;
                if (!(ls >> v)) throw input_error("family data: bad edge line: " + line);
                edges.push_back({u, v});
                ++seen;
            }
        }
        flush();
        return out;
    }();
    return tables;
}

std::vector<Edge> seven_cycle_edges() {
    std::vector<Edge> e;
    for (int i = 0; i < 7; ++i) e.push_back({i, (i + 1) % 7});
    return e;
}

void attach(std::vector<Edge>& edges, int v, std::initializer_list<int> hole_nbrs) {
    for (int h : hole_nbrs) edges.push_back({v, h});
}

constexpr std::array<int, 7> hole_colors = {0, 1, 0, 1, 0, 1, 2};

void check_proper(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            throw structure_error("reference coloring is not proper at edge " + std::to_string(u) +
                                  "-" + std::to_string(v));
}

} // namespace

std::string family_name(FamilyId id) { return "F" + std::to_string((int)id + 1); }

FamilyId family_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (!s.empty() && s[0] == 'f') s = s.substr(1);
    try {
        int k = std::stoi(s);
        if (k >= 1 && k <= 12) return (FamilyId)(k - 1);
    } catch (const std::exception&) {
    }
    throw input_error("unknown family name: " + name);
}

std::string FamilySpec::to_string() const {
    std::string s = family_name(id);
    if (id == FamilyId::f9) s += "(" + std::to_string(t1) + "," + std::to_string(t2) + ")";
    else if (id == FamilyId::f10 || id == FamilyId::f11) s += "(" + std::to_string(t1) + ")";
    return s;
}

namespace {

void validate(const FamilySpec& spec) {
    switch (spec.id) {
    case FamilyId::f9:
        if (spec.t1 < 1 || spec.t2 < 1) throw input_error("F9 needs t1 >= 1 and t2 >= 1");
        break;
    case FamilyId::f10:
    case FamilyId::f11:
        if (spec.t1 < 1) throw input_error(family_name(spec.id) + " needs t1 >= 1");
        if (spec.t2 != 0) throw input_error(family_name(spec.id) + " takes a single parameter");
        break;
    default:
        if (spec.t1 != 0 || spec.t2 != 0)
            throw input_error(family_name(spec.id) + " is parameter-free");
    }
}

} // namespace

int family_size(const FamilySpec& spec) {
    validate(spec);
    switch (spec.id) {
    case FamilyId::f1: return 12;
    case FamilyId::f2: return 10;
    case FamilyId::f3: return 10;
    case FamilyId::f4: return 11;
    case FamilyId::f5: return 11;
    case FamilyId::f6: return 11;
    case FamilyId::f7: return 11;
    case FamilyId::f8: return 10;
    case FamilyId::f9: return 10 + 2 * (spec.t1 + spec.t2);
    case FamilyId::f10: return 10 + 2 * spec.t1;
    case FamilyId::f11: return 11 + 2 * spec.t1;
    case FamilyId::f12: return 11;
    }
    return -1;
}

Graph generate_family(const FamilySpec& spec) {
    validate(spec);
    switch (spec.id) {
    case FamilyId::f9: {
        // Core: b2 {h2,h4,h5}, q1 {h1,h2,h4}, q3 {h3,h4,h6}; then the four
        // matched stable sets T1, T3 (size t1) and T2, T4 (size t2).
        // T1 and T2 attach at {h2,h4}, T3 at {h7,h2}, T4 at {h4,h6}.
        auto e = seven_cycle_edges();
        attach(e, 7, {1, 3, 4});
        attach(e, 8, {0, 1, 3});
        attach(e, 9, {2, 3, 5});
        int t1 = spec.t1, t2 = spec.t2;
        int base = 10;
        for (int k = 0; k < t1; ++k) {
            int u = base + k, w = base + t1 + k;
            attach(e, u, {1, 3});
            attach(e, w, {6, 1});
            e.push_back({u, w});
        }
        base += 2 * t1;
        for (int k = 0; k < t2; ++k) {
            int u = base + k, w = base + t2 + k;
            attach(e, u, {1, 3});
            attach(e, w, {3, 5});
            e.push_back({u, w});
        }
        return Graph::build(10 + 2 * (t1 + t2), e);
    }
    case FamilyId::f10: {
        auto e = seven_cycle_edges();
        attach(e, 7, {1, 3, 4});
        attach(e, 8, {0, 1, 3});
        attach(e, 9, {2, 3, 5});
        for (int k = 0; k < spec.t1; ++k) {
            int u = 10 + k, w = 10 + spec.t1 + k;
            attach(e, u, {1, 3});
            attach(e, w, {6, 1});
            e.push_back({u, w});
        }
        return Graph::build(10 + 2 * spec.t1, e);
    }
    case FamilyId::f11: {
        // Core: b2, b4 {h4,h6,h7}, q1, q3 with the single edge b4-q1; then
        // matched stable sets at {h2,h4} and {h4,h6}.
        auto e = seven_cycle_edges();
        attach(e, 7, {1, 3, 4});
        attach(e, 8, {3, 5, 6});
        attach(e, 9, {0, 1, 3});
        attach(e, 10, {2, 3, 5});
        e.push_back({8, 9});
        for (int k = 0; k < spec.t1; ++k) {
            int u = 11 + k, w = 11 + spec.t1 + k;
            attach(e, u, {1, 3});
            attach(e, w, {3, 5});
            e.push_back({u, w});
        }
        return Graph::build(11 + 2 * spec.t1, e);
    }
    default: {
        auto it = fixed_family_tables().find(family_name(spec.id));
        if (it == fixed_family_tables().end())
            throw unsupported_error("no adjacency table for " + family_name(spec.id));
        return it->second;
    }
    }
}

std::vector<int> family_reference_coloring(const FamilySpec& spec) {
    validate(spec);
    std::vector<int> colors(hole_colors.begin(), hole_colors.end());
    auto push = [&](std::initializer_list<int> tail) {
        for (int c : tail) colors.push_back(c);
    };
    auto push_n = [&](int count, int c) {
        for (int k = 0; k < count; ++k) colors.push_back(c);
    };
    switch (spec.id) {
    case FamilyId::f1: push({1, 0, 2, 2, 2}); break;          // a5 a7 b3 q1 d1
    case FamilyId::f2: push({2, 1, 0}); break;                // d1 a5 a7
    case FamilyId::f3: push({2, 2, 0}); break;                // b3 d1 a7
    case FamilyId::f4: push({2, 2, 1, 0}); break;             // b3 d1 a5 a7
    case FamilyId::f5: push({2, 2, 2, 1}); break;             // b3 q1 d1 a5
    case FamilyId::f6: push({2, 2, 2, 0}); break;             // b3 q1 q3 a7
    case FamilyId::f7: push({1, 0, 2, 2}); break;             // a5 a7 b3 q1
    case FamilyId::f8: push({2, 2, 1}); break;                // b3 q1 a5
    case FamilyId::f9:
        push({2, 2, 2});                                      // b2 q1 q3
        push_n(spec.t1, 2);                                   // T1
        push_n(spec.t1, 0);                                   // T3
        push_n(spec.t2, 0);                                   // T2
        push_n(spec.t2, 2);                                   // T4
        break;
    case FamilyId::f10:
        push({2, 2, 2});
        push_n(spec.t1, 2);
        push_n(spec.t1, 0);
        break;
    case FamilyId::f11:
        push({2, 0, 2, 2});                                   // b2 b4 q1 q3
        push_n(spec.t1, 0);
        push_n(spec.t1, 2);
        break;
    case FamilyId::f12: push({2, 0, 2, 2}); break;            // b2 b4 q1 q3
    }
    check_proper(generate_family(spec), colors);
    return colors;
}

Graph generate_blowup(const BlowupSpec& spec) {
    int n = 0;
    std::array<int, 8> start{};
    for (int i = 0; i < 7; ++i) {
        if (spec.sizes[i] < 1) throw input_error("blowup bag sizes must be >= 1");
        start[i] = n;
        n += spec.sizes[i];
    }
    start[7] = n;
    std::vector<Edge> e;
    for (int i = 0; i < 7; ++i) {
        int j = (i + 1) % 7;
        for (int u = start[i]; u < start[i] + spec.sizes[i]; ++u)
            for (int v = start[j]; v < start[j] + spec.sizes[j]; ++v) e.push_back({u, v});
        if (spec.clique)
            for (int u = start[i]; u < start[i] + spec.sizes[i]; ++u)
                for (int v = u + 1; v < start[i] + spec.sizes[i]; ++v) e.push_back({u, v});
    }
    return Graph::build(n, e);
}

Graph generate_counterexample(const std::string& which, int t) {
    std::string s = which;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "g1" || s == "g2")
        throw unsupported_error(s + " is defined only by a figure; its adjacency table is not "
                                    "shipped (see data/families.txt)");
    if (s == "g3") {
        if (t < 1) throw input_error("g3 needs a positive bag size");
        BlowupSpec spec;
        spec.sizes.fill(t);
        spec.clique = true;
        return generate_blowup(spec);
    }
    if (s == "g4") return Graph::cycle(7).complement();
    throw input_error("unknown counterexample name: " + which);
}

std::vector<FamilySpec> classify_family_all(const Graph& g) {
    std::vector<FamilySpec> matches;
    int n = g.vertex_count();
    std::vector<FamilySpec> candidates;
    for (int k = 0; k < 12; ++k) {
        auto id = (FamilyId)k;
        if (id == FamilyId::f9) {
            for (int t1 = 1; 10 + 2 * t1 + 2 < n + 1; ++t1) {
                int rest = n - 10 - 2 * t1;
                if (rest >= 2 && rest % 2 == 0) candidates.push_back({id, t1, rest / 2});
            }
        } else if (id == FamilyId::f10 || id == FamilyId::f11) {
            int fixed = id == FamilyId::f10 ? 10 : 11;
            if (n > fixed && (n - fixed) % 2 == 0) candidates.push_back({id, (n - fixed) / 2, 0});
        } else {
            if (family_size({id, 0, 0}) == n) candidates.push_back({id, 0, 0});
        }
    }
    for (const FamilySpec& spec : candidates)
        if (are_isomorphic(g, generate_family(spec))) matches.push_back(spec);
    return matches;
}

std::optional<FamilySpec> classify_family(const Graph& g) {
    auto all = classify_family_all(g);
    if (all.empty()) return std::nullopt;
    return all.front();
}

} // namespace p7c5
