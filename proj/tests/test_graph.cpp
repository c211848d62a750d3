#include <doctest.h>

#include "p7c5/families.hpp"
#include "p7c5/graph.hpp"
#include "support/graphs.hpp"
#include "support/samplers.hpp"

using namespace p7c5;

TEST_CASE("build basics") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph c7 = Graph::cycle(7);
    for (int v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);
    CHECK(c7.edge_count() == 7);

    Graph dup = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 5}}), input_error);
    CHECK_THROWS_AS(Graph::build(2000, {}), size_limit_error);
}

TEST_CASE("neighborhoods partition the vertex set") {
    Graph c7 = Graph::cycle(7);
    CHECK(c7.neighbors(0).to_vector() == std::vector<int>{1, 6});
    CHECK(c7.non_neighbors(0).to_vector() == std::vector<int>{2, 3, 4, 5});

    Graph k4 = Graph::complete(4);
    CHECK(k4.non_neighbors(1).empty());

    Graph e5 = Graph::empty_graph(5);
    CHECK(e5.neighbors(0).empty());
    CHECK(e5.non_neighbors(0).count() == 4);

    testgen::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testgen::random_graph(9, 0.4, rng);
        for (int v = 0; v < 9; ++v) {
            VertexSet all = g.neighbors(v) | g.non_neighbors(v);
            CHECK(!all.test(v));
            all.set(v);
            CHECK(all == VertexSet::full(9));
            CHECK(!(g.neighbors(v) & g.non_neighbors(v)).count());
        }
    }
}

TEST_CASE("induced subgraphs") {
    Graph c7 = Graph::cycle(7);
    VertexSet s(7);
    for (int v : {0, 1, 2, 3}) s.set(v);
    auto sub = c7.induced(s);
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 3); // a path
    CHECK(sub.graph.degree(0) == 1);
    CHECK(sub.graph.degree(3) == 1);

    auto whole = c7.induced(c7.all_vertices());
    CHECK(whole.graph.edges() == c7.edges());

    Graph pet = testgen::petersen();
    VertexSet outer(10);
    for (int v = 0; v < 5; ++v) outer.set(v);
    auto ring = pet.induced(outer);
    CHECK(ring.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(ring.graph.degree(v) == 2);
}

TEST_CASE("complement is an involution") {
    CHECK(Graph::complete(4).complement().edge_count() == 0);

    Graph c5 = Graph::cycle(5);
    Graph cc5 = c5.complement();
    CHECK(cc5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cc5.degree(v) == 2);

    Graph g4 = Graph::cycle(7).complement();
    for (int v = 0; v < 7; ++v) CHECK(g4.degree(v) == 4);

    testgen::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testgen::random_graph(10, 0.5, rng);
        CHECK(g.complement().complement().edges() == g.edges());
    }
}

TEST_CASE("set neighborhoods") {
    Graph c7 = Graph::cycle(7);
    VertexSet s(7);
    s.set(0);
    s.set(1);
    CHECK(c7.neighbors_of_set(s).to_vector() == std::vector<int>{2, 6});
    CHECK(c7.non_neighbors_of_set(s).to_vector() == std::vector<int>{3, 4, 5});

    testgen::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testgen::random_graph(10, 0.3, rng);
        VertexSet x(10);
        for (int v = 0; v < 10; ++v)
            if (rng() % 3 == 0) x.set(v);
        VertexSet nx = g.neighbors_of_set(x);
        CHECK(!(nx & x).count());
        CHECK(g.non_neighbors_of_set(x) == (VertexSet::full(10) - x - nx));
    }
}

TEST_CASE("basic stats") {
    auto c7 = Graph::cycle(7).basic_stats();
    CHECK(c7.min_degree == 2);
    CHECK(c7.connected);

    auto f1 = generate_family({FamilyId::f1, 0, 0}).basic_stats();
    CHECK(f1.min_degree == 4);
    CHECK(f1.connected);

    Graph two = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto st = two.basic_stats();
    CHECK(st.components.size() == 2);
    CHECK(!st.connected);
}
