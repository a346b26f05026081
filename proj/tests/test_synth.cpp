#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "resfit/graph.hpp"
#include "resfit/synth.hpp"

using namespace resfit;

TEST_CASE("ring of cliques layout") {
    SynthResult r = ring_of_cliques(4, 3);
    const Graph& g = r.graph;
    CHECK(g.n() == 12);
    CHECK(g.m() == 4 * 3 + 4);
    CHECK(is_connected(g));
    // one ring arc per clique; its endpoints are node i*k and node (i+1)*k + 1
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(3, 7));
    CHECK(g.has_edge(6, 10));
    CHECK(g.has_edge(9, 1));
    int deg3 = 0, deg2 = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        if (g.degree(u) == 3) ++deg3;
        if (g.degree(u) == 2) ++deg2;
    }
    CHECK(deg3 == 8);  // no node carries more than one ring edge
    CHECK(deg2 == 4);
    CHECK(r.planted.k == 4);
    for (NodeId u = 0; u < g.n(); ++u) CHECK(r.planted.labels[u] == u / 3);
}

TEST_CASE("ring of cliques preconditions") {
    CHECK_THROWS_AS(ring_of_cliques(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(ring_of_cliques(5, 2), std::invalid_argument);
}

TEST_CASE("planted partition is pinned by its seed") {
    SynthResult a = planted_partition(4, 8, 0.5, 0.05, 123);
    SynthResult b = planted_partition(4, 8, 0.5, 0.05, 123);
    CHECK(a.graph.hash() == b.graph.hash());
    CHECK(a.planted.labels == b.planted.labels);
    SynthResult c = planted_partition(4, 8, 0.5, 0.05, 124);
    CHECK(a.graph.hash() != c.graph.hash());

    CHECK(a.graph.n() == 32);
    CHECK(a.planted.k == 4);
    for (NodeId u = 0; u < a.graph.n(); ++u) CHECK(a.planted.labels[u] == u / 8);
}

TEST_CASE("extreme probabilities") {
    // p_in = 1, p_out = 0: two disjoint cliques
    SynthResult full = planted_partition(2, 3, 1.0, 0.0, 7);
    CHECK(full.graph.n() == 6);
    CHECK(full.graph.m() == 6);
    CHECK_FALSE(is_connected(full.graph));

    // p = 0 everywhere: the isolation patch-up leaves no degree-zero node
    SynthResult empty = planted_partition(3, 4, 0.0, 0.0, 7);
    for (NodeId u = 0; u < empty.graph.n(); ++u) CHECK(empty.graph.degree(u) >= 1);
}
