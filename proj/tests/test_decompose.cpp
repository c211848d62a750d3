#include <doctest.h>

#include "p7c5/coloring.hpp"
#include "p7c5/decompose.hpp"
#include "p7c5/families.hpp"
#include "p7c5/isomorphism.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"
#include "support/samplers.hpp"

using namespace p7c5;

TEST_CASE("comparable pairs") {
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    auto cp = find_comparable_pair(star);
    REQUIRE(cp);
    CHECK(cp->first == 1);
    CHECK(cp->second == 2);

    CHECK(!find_comparable_pair(Graph::cycle(7)));
    CHECK(!find_comparable_pair(generate_family({FamilyId::f9, 2, 1})));
    CHECK(!find_comparable_pair(generate_family({FamilyId::f9, 2, 2})));
}

TEST_CASE("universal cliques") {
    Graph wheel = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                   {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
    auto uc = find_universal_clique(wheel);
    REQUIRE(uc);
    CHECK(uc->to_vector() == std::vector<int>{6});

    CHECK(!find_universal_clique(Graph::cycle(7)));

    auto k5 = find_universal_clique(Graph::complete(5));
    REQUIRE(k5);
    CHECK(k5->count() == 5);
}

TEST_CASE("clique cutsets") {
    auto mid = find_clique_cutset(Graph::path(3));
    REQUIRE(mid);
    CHECK(mid->to_vector() == std::vector<int>{1});

    Graph bowtie = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto shared = find_clique_cutset(bowtie);
    REQUIRE(shared);
    CHECK(shared->to_vector() == std::vector<int>{2});

    CHECK(!find_clique_cutset(Graph::cycle(7)));
    CHECK_THROWS_AS(find_clique_cutset(Graph::empty_graph(3)), input_error);
}

TEST_CASE("clique cutset needs the expansion step") {
    // Two triangles a1-a2, b1-b2 joined through the edge s1-s2, with each
    // side seeing only one of s1, s2 per vertex.  {s1,s2} is the unique
    // clique cutset and is not a separator close to any single vertex.
    // 0=a1 1=a2 2=s1 3=s2 4=b1 5=b2
    Graph g = Graph::build(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    auto cut = find_clique_cutset(g);
    REQUIRE(cut);
    CHECK(cut->to_vector() == std::vector<int>{2, 3});
}

TEST_CASE("clique cutsets and separators match brute force on small graphs") {
    testgen::enumerate_graphs(6, [&](const Graph& g) {
        if (!g.basic_stats().connected || g.vertex_count() < 2) return;
        auto cut = find_clique_cutset(g);
        CHECK(cut.has_value() == oracle::has_clique_cutset_subsets(g));
        if (cut) {
            CHECK(g.is_clique(*cut));
            VertexSet rest = g.all_vertices();
            rest -= *cut;
            CHECK(g.induced(rest).graph.basic_stats().components.size() > 1);
        }
        for (const VertexSet& s : minimal_separators(g))
            CHECK(oracle::is_minimal_separator_subsets(g, s));
        // Converse: every brute-force minimal separator is enumerated.
        auto seps = minimal_separators(g);
        int n = g.vertex_count();
        for (int mask = 1; mask < (1 << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) s.set(v);
            if (s.count() >= n - 1) continue;
            if (!oracle::is_minimal_separator_subsets(g, s)) continue;
            bool found = false;
            for (const VertexSet& t : seps)
                if (t == s) found = true;
            CHECK(found);
        }
    });
}

TEST_CASE("homogeneous sets") {
    Graph paw = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto s = find_homogeneous_set(paw);
    REQUIRE(s);
    CHECK(s->to_vector() == std::vector<int>{1, 2});

    CHECK(!find_homogeneous_set(Graph::cycle(7)));

    BlowupSpec two{{2, 1, 1, 1, 1, 1, 1}, false};
    CHECK(find_homogeneous_set(generate_blowup(two)).has_value());

    testgen::Rng rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + (int)(rng() % 5);
        Graph g = testgen::random_graph(n, 0.15 + 0.07 * (double)(rng() % 10), rng);
        auto hom = find_homogeneous_set(g);
        CHECK(hom.has_value() == oracle::has_homogeneous_set_subsets(g));
        if (hom) {
            CHECK(hom->count() > 1);
            CHECK(hom->count() < n);
            for (int v = 0; v < n; ++v) {
                if (hom->test(v)) continue;
                CHECK((g.is_complete_to(v, *hom) || g.is_anticomplete_to(v, *hom)));
            }
        }
    }
}

TEST_CASE("twin quotients and blowup reconstruction") {
    Graph c7 = Graph::cycle(7);
    auto plain = twin_quotient(c7);
    CHECK(plain.classes.size() == 7);
    CHECK(are_isomorphic(plain.quotient, c7));

    // Duplicate one vertex as a false twin.
    Graph dup = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                                 {7, 1}, {7, 6}});
    auto tq = twin_quotient(dup);
    CHECK(tq.classes.size() == 7);
    std::vector<int> sizes;
    for (const auto& cls : tq.classes) sizes.push_back(cls.count());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 1, 1, 1, 1, 2});
    CHECK(are_isomorphic(tq.quotient, c7));

    // Matched stable sets are not twins.
    Graph f9 = generate_family({FamilyId::f9, 2, 1});
    auto f9q = twin_quotient(f9);
    CHECK(f9q.classes.size() == (size_t)f9.vertex_count());

    // Rebuilding from the quotient reproduces the graph exactly.
    testgen::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testgen::random_graph(8, 0.35, rng);
        auto q = twin_quotient(g);
        std::vector<Edge> rebuilt;
        for (int a = 0; a < q.quotient.vertex_count(); ++a)
            for (int b = a + 1; b < q.quotient.vertex_count(); ++b)
                if (q.quotient.adjacent(a, b))
                    q.classes[a].for_each([&](int u) {
                        q.classes[b].for_each([&](int v) { rebuilt.push_back({u, v}); });
                    });
        CHECK(Graph::build(g.vertex_count(), rebuilt).edges() == g.edges());
        for (const auto& cls : q.classes) CHECK(g.is_stable_set(cls));
    }
}

TEST_CASE("reductions preserve the chromatic number") {
    testgen::Rng rng(31);
    int comparable_seen = 0, universal_seen = 0;
    for (int trial = 0; trial < 400 && (comparable_seen < 40 || universal_seen < 40); ++trial) {
        int n = 5 + (int)(rng() % 5);
        Graph g = testgen::random_graph(n, 0.25 + 0.05 * (double)(rng() % 8), rng);
        if (universal_seen < 40 && trial % 3 == 0) {
            // Plant a universal vertex to exercise the peel identity.
            auto edges = g.edges();
            for (int v = 0; v < n; ++v) edges.push_back({v, n});
            g = Graph::build(n + 1, edges);
        }
        if (auto cp = find_comparable_pair(g); cp && comparable_seen < 40) {
            ++comparable_seen;
            VertexSet keep = g.all_vertices();
            keep.reset(cp->first);
            CHECK(exact_chromatic(g).chi == exact_chromatic(g.induced(keep).graph).chi);
        }
        if (auto uc = find_universal_clique(g); uc && universal_seen < 40) {
            ++universal_seen;
            VertexSet rest = g.all_vertices();
            rest -= *uc;
            CHECK(exact_chromatic(g).chi ==
                  exact_chromatic(g.induced(rest).graph).chi + uc->count());
        }
    }
    CHECK(comparable_seen >= 40);
    CHECK(universal_seen >= 40);
}
