#include <doctest.h>

#include "p7c5/coloring.hpp"
#include "p7c5/decompose.hpp"
#include "p7c5/families.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "support/samplers.hpp"

using namespace p7c5;

TEST_CASE("max clique") {
    CHECK(max_clique(Graph::cycle(7)).omega == 2);
    CHECK(max_clique(Graph::complete(9)).omega == 9);
    CHECK(max_clique(Graph::empty_graph(0)).omega == 0);

    Graph g3 = generate_counterexample("g3", 2);
    auto clique = max_clique(g3);
    CHECK(clique.omega == 4);
    CHECK(g3.is_clique(clique.witness));

    CHECK(max_clique(generate_family({FamilyId::f1, 0, 0})).omega == 3);
}

TEST_CASE("exact chromatic number") {
    CHECK(exact_chromatic(Graph::cycle(7)).chi == 3);
    CHECK(exact_chromatic(Graph::empty_graph(5)).chi == 1);
    CHECK(exact_chromatic(Graph::empty_graph(0)).chi == 0);
    CHECK(exact_chromatic(generate_counterexample("g3", 2)).chi == 5);
    CHECK_THROWS_AS(exact_chromatic(Graph::empty_graph(25)), size_limit_error);

    testgen::Rng rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + (int)(rng() % 7); // up to 10
        Graph g = testgen::random_graph(n, 0.2 + 0.07 * (double)(rng() % 9), rng);
        auto exact = exact_chromatic(g);
        CHECK(exact.chi == oracle::naive_chromatic(g));
        CHECK(exact.coloring.proper(g));
        CHECK(exact.chi >= max_clique(g).omega);
    }
}

TEST_CASE("clique cutset merge keeps piece colorings up to palette permutation") {
    // Three triangles chained through two cut vertices: nested cutset
    // splits, merged back on the shared cliques.
    Graph chain = Graph::build(7, {{0, 1}, {0, 2}, {1, 2},      // a b z1
                                   {2, 3}, {2, 4}, {3, 4},      // z1 w z2
                                   {4, 5}, {4, 6}, {5, 6}});    // z2 c d
    Coloring c = structural_color(chain, GraphClass::diamond);
    CHECK(c.proper(chain));
    CHECK(c.colors_used == 3);
    bool saw_cutset = false;
    for (const auto& step : c.trace)
        if (step.kind == ReductionStep::Kind::split_clique_cutset) saw_cutset = true;
    CHECK(saw_cutset);
    // Every piece (triangle) must carry three distinct colors, i.e. the
    // merge only permuted piece palettes.
    for (auto tri : {std::array<int, 3>{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}) {
        CHECK(c.assignment[tri[0]] != c.assignment[tri[1]]);
        CHECK(c.assignment[tri[1]] != c.assignment[tri[2]]);
        CHECK(c.assignment[tri[0]] != c.assignment[tri[2]]);
    }
}

TEST_CASE("structural coloring on the base families") {
    for (const FamilySpec spec : {FamilySpec{FamilyId::f7, 0, 0}, FamilySpec{FamilyId::f12, 0, 0},
                                  FamilySpec{FamilyId::f9, 2, 1}}) {
        Graph g = generate_family(spec);
        Coloring c = structural_color(g, GraphClass::diamond);
        CHECK(c.proper(g));
        CHECK(c.colors_used == 3);
    }
    Graph f1 = generate_family({FamilyId::f1, 0, 0});
    Coloring kp = structural_color(f1, GraphClass::kp);
    CHECK(kp.proper(f1));
    CHECK(kp.colors_used == 3);
}

TEST_CASE("structural coloring on blowups") {
    BlowupSpec spec{{3, 1, 2, 1, 1, 1, 1}, false};
    Graph g = generate_blowup(spec);
    Coloring c = structural_color(g, GraphClass::paw);
    CHECK(c.proper(g));
    CHECK(c.colors_used == 3);

    for (int t : {1, 2, 3}) {
        Graph g3 = generate_counterexample("g3", t);
        Coloring kp = structural_color(g3, GraphClass::kp);
        CHECK(kp.proper(g3));
        CHECK(kp.colors_used == 2 * t + 1); // meets the bound exactly
    }

    Coloring c7 = structural_color(Graph::cycle(7), GraphClass::diamond);
    CHECK(c7.colors_used == 3);
}

TEST_CASE("pipeline handles the reductions") {
    // A comparable pair, a universal vertex over one piece, and a cutset.
    Graph f3 = generate_family({FamilyId::f3, 0, 0});
    auto edges = f3.edges();
    int n = f3.vertex_count();
    edges.push_back({n, 0});     // pendant: comparable with any other v1-neighbor's twin
    Graph g = Graph::build(n + 1, edges);
    Coloring c = structural_color(g, GraphClass::diamond);
    CHECK(c.proper(g));
    CHECK(c.colors_used <= 3);
    bool saw_comparable = false;
    for (const auto& step : c.trace)
        if (step.kind == ReductionStep::Kind::remove_comparable) saw_comparable = true;
    CHECK(saw_comparable);

    // Disjoint union: component split plus palette reuse.
    Graph two = Graph::build(14, [&] {
        auto e = Graph::cycle(7).edges();
        for (auto [u, v] : Graph::cycle(7).edges()) e.push_back({u + 7, v + 7});
        return e;
    }());
    Coloring cc = structural_color(two, GraphClass::paw);
    CHECK(cc.proper(two));
    CHECK(cc.colors_used == 3);

    // Perfect input goes straight to the exact solver.
    Coloring p = structural_color(Graph::path(6), GraphClass::diamond);
    CHECK(p.colors_used == 2);
}

TEST_CASE("pipeline reports class violations lazily") {
    CHECK_THROWS_AS(structural_color(testgen::petersen(), GraphClass::kp), input_error);
}

TEST_CASE("divisible coloring") {
    Coloring c7 = divisible_color(Graph::cycle(7));
    CHECK(c7.proper(Graph::cycle(7)));
    CHECK(c7.colors_used <= 3); // omega 2: at most 3 colors

    // Perfect members are colored in one exact step.
    Coloring c6 = divisible_color(Graph::cycle(6));
    CHECK(c6.colors_used == 2);

    CHECK_THROWS_AS(divisible_color(Graph::empty_graph(40)), size_limit_error);

    testgen::Rng rng(71);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 60; ++trial) {
        int target = 8 + (int)(rng() % 6);
        Graph g = testgen::random_bull_candidate(target, rng);
        if (!class_membership(g, GraphClass::bull).member) continue;
        ++checked;
        int omega = max_clique(g).omega;
        Coloring c = divisible_color(g);
        CHECK(c.proper(g));
        CHECK(c.colors_used <= (omega + 1) * omega / 2);
        if (g.vertex_count() <= 14) CHECK(c.colors_used >= exact_chromatic(g).chi);
    }
    CHECK(checked >= 60);
}

TEST_CASE("divisible partition invariants") {
    testgen::Rng rng(73);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        Graph g = testgen::random_bull_candidate(10, rng);
        if (!class_membership(g, GraphClass::bull).member) continue;
        if (g.edge_count() == 0) continue;
        ++checked;
        auto part = divisible_partition(g, default_perfection_limit);
        auto psub = g.induced(part.perfect_part);
        CHECK(is_perfect(psub.graph));
        auto rsub = g.induced(part.rest);
        CHECK(max_clique(rsub.graph).omega < max_clique(g).omega);
        VertexSet both = part.perfect_part | part.rest;
        CHECK(both == g.all_vertices());
        CHECK(!(part.perfect_part & part.rest).count());
    }
    CHECK(checked >= 30);
}

TEST_CASE("trace covers the graph") {
    Graph f9 = generate_family({FamilyId::f9, 1, 2});
    Coloring c = structural_color(f9, GraphClass::diamond);
    VertexSet covered(f9.vertex_count());
    for (const auto& step : c.trace) {
        switch (step.kind) {
        case ReductionStep::Kind::remove_comparable:
        case ReductionStep::Kind::remove_low_degree: covered.set(step.payload[0]); break;
        case ReductionStep::Kind::extract_universal_clique:
        case ReductionStep::Kind::base_perfect:
        case ReductionStep::Kind::base_family:
        case ReductionStep::Kind::base_blowup:
            for (int v : step.payload) covered.set(v);
            break;
        default: break;
        }
    }
    CHECK(covered == f9.all_vertices());
}
