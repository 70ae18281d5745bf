#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "genergy/graph.hpp"

using namespace genergy;

TEST_CASE("degree sequences of named families") {
    CHECK(degree_sequence(Graph::path(4)) == DegreeSequence{2, 2, 1, 1});
    CHECK(degree_sequence(Graph::complete(4)) == DegreeSequence{3, 3, 3, 3});
    CHECK(degree_sequence(Graph(1)) == DegreeSequence{0});
}

TEST_CASE("conjugate degree sequence") {
    CHECK(conjugate_degree_sequence({2, 2, 2, 2, 2}) ==
          ConjugateDegreeSequence{5, 5, 0, 0, 0});
    CHECK(conjugate_degree_sequence({3, 3, 3, 3}) ==
          ConjugateDegreeSequence{4, 4, 4, 0});
    // star K_{1,3}
    CHECK(conjugate_degree_sequence({3, 1, 1, 1}) ==
          ConjugateDegreeSequence{4, 1, 1, 0});
}

TEST_CASE("conjugation is an involution and preserves the sum") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        const DegreeSequence d = degree_sequence(g);
        const ConjugateDegreeSequence ds = conjugate_degree_sequence(d);
        CHECK(std::accumulate(d.begin(), d.end(), 0) ==
              std::accumulate(ds.begin(), ds.end(), 0));
        CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.edge_count());
        CHECK(conjugate_degree_sequence(ds) == d);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph::path(5)));
    CHECK(is_connected(Graph(1)));
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_FALSE(is_connected(two_edges));
}

TEST_CASE("family constructors") {
    CHECK(Graph::path(2).edge_count() == 1);
    CHECK(Graph::cycle(3).edge_count() == 3);
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("threshold recognition") {
    CHECK(is_threshold(Graph::complete(5)));
    CHECK(is_threshold(Graph(1)));
    Graph star(5);
    for (int v = 1; v < 5; ++v) star.add_edge(0, v);
    CHECK(is_threshold(star));
    CHECK_FALSE(is_threshold(Graph::cycle(4)));
    CHECK_FALSE(is_threshold(Graph::path(4)));
}

TEST_CASE("relabeling preserves structure") {
    const Graph p = Graph::path(4);
    const Graph q = p.relabeled({3, 2, 1, 0});
    CHECK(q.edge_count() == 3);
    CHECK(q.has_edge(3, 2));
    CHECK(q.has_edge(1, 0));
    CHECK_FALSE(q.has_edge(0, 3));
}
