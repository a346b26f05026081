#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "resfit/graph.hpp"

using namespace resfit;

TEST_CASE("from_edges compacts ids, drops self loops and duplicates") {
    LoadStats st;
    Graph g = Graph::from_edges({{7, 5}, {5, 7}, {3, 3}, {5, 3}, {1000000007, 5}}, &st);
    CHECK(st.self_loops_dropped == 1);
    CHECK(st.duplicate_edges_dropped == 1);
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    // compact ids are ranks of the sorted original ids
    CHECK(g.original_id(0) == 3);
    CHECK(g.original_id(1) == 5);
    CHECK(g.original_id(2) == 7);
    CHECK(g.original_id(3) == 1000000007);
    CHECK(g.compact_id(5).value() == 1);
    CHECK_FALSE(g.compact_id(4).has_value());
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 3);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("edge list parsing accepts comments and flags bad lines") {
    std::istringstream ok("# header\n1 2\n\n2\t3\n");
    auto [g, st] = load_edge_list(ok);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);

    std::istringstream bad("1 2\n1 x\n");
    CHECK_THROWS_AS(load_edge_list(bad), ParseError);
    std::istringstream lonely("1\n");
    CHECK_THROWS_AS(load_edge_list(lonely), ParseError);
    std::istringstream negative("1 -2\n");
    CHECK_THROWS_AS(load_edge_list(negative), ParseError);
}

TEST_CASE("edge list round trip preserves the graph") {
    Graph g = fixtures::random_connected(12, 0.3, 5);
    std::ostringstream out;
    save_edge_list(g, out);
    std::istringstream in(out.str());
    auto [h, st] = load_edge_list(in);
    CHECK(h.n() == g.n());
    CHECK(h.m() == g.m());
    CHECK(h.hash() == g.hash());
}

TEST_CASE("graph hash ignores edge order and endpoint order") {
    Graph a = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}});
    Graph b = Graph::from_edges({{3, 2}, {1, 0}, {2, 1}});
    CHECK(a.hash() == b.hash());
    Graph c = Graph::from_edges({{0, 1}, {1, 2}, {2, 0}});
    CHECK(a.hash() != c.hash());
}

TEST_CASE("barbell degrees, cut, volume, conductance") {
    Graph g = fixtures::barbell();
    REQUIRE(g.n() == 6);
    REQUIRE(g.m() == 7);
    std::vector<int> degs;
    for (NodeId u = 0; u < g.n(); ++u) degs.push_back(g.degree(u));
    CHECK(degs == std::vector<int>{2, 2, 3, 3, 2, 2});

    NodeSet left = NodeSet::of({0, 1, 2});
    CHECK(cut(g, left) == 1);
    CHECK(vol(g, left) == 7);
    Rational phi = conductance(g, left);
    CHECK(phi.num == 1);
    CHECK(phi.den == 7);

    // the complement of one degree-2 node has the smaller side's volume 2
    NodeSet rest = NodeSet::of({0}).complement(g.n());
    Rational phi1 = conductance(g, rest);
    CHECK(phi1.num == 2);
    CHECK(phi1.den == 2);

    CHECK(cut(g, left.flags(g.n())) == 1);
}

TEST_CASE("node set basics") {
    NodeSet s = NodeSet::of({3, 1, 3, 2});
    CHECK(s.ids == std::vector<NodeId>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(0));
    auto fl = s.flags(5);
    CHECK(fl == std::vector<char>{0, 1, 1, 1, 0});
    CHECK(s.complement(5).ids == std::vector<NodeId>{0, 4});
}

TEST_CASE("clustering labels are canonicalized by first appearance") {
    Clustering c = Clustering::from_labels({2, 2, 0, 1});
    CHECK(c.labels == std::vector<std::int32_t>{0, 0, 1, 2});
    CHECK(c.k == 3);
    auto gs = c.groups();
    REQUIRE(gs.size() == 3);
    CHECK(gs[0] == std::vector<NodeId>{0, 1});
    CHECK(gs[1] == std::vector<NodeId>{2});
}

TEST_CASE("bfs_grow adds whole layers, then fills lowest ids first") {
    Graph p = fixtures::path(5);
    NodeSet mid = NodeSet::of({2});
    CHECK(bfs_grow(p, mid, 3).ids == std::vector<NodeId>{1, 2, 3});
    CHECK(bfs_grow(p, mid, 4).ids == std::vector<NodeId>{0, 1, 2, 3});

    Graph s = fixtures::star(4);
    NodeSet hub = NodeSet::of({0});
    CHECK(bfs_grow(s, hub, 3).ids == std::vector<NodeId>{0, 1, 2});
    // a target below the current size keeps the seed set
    CHECK(bfs_grow(s, hub, 1).ids == std::vector<NodeId>{0});
    // a target beyond the component returns what is reachable
    CHECK(bfs_grow(p, mid, 99).size() == 5);
}

TEST_CASE("largest_component prefers the smallest member id on ties") {
    Graph g = Graph::from_edges({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}});
    CHECK(largest_component(g).ids == std::vector<NodeId>{0, 1, 2});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(fixtures::barbell()));
}

TEST_CASE("induced_subgraph keeps original ids") {
    Graph g = fixtures::barbell();
    Graph sub = induced_subgraph(g, NodeSet::of({2, 3}));
    CHECK(sub.n() == 2);
    CHECK(sub.m() == 1);
    CHECK(sub.original_id(0) == 3);
    CHECK(sub.original_id(1) == 4);

    Graph tri = induced_subgraph(g, NodeSet::of({0, 1, 2}));
    CHECK(tri.m() == 3);
}

TEST_CASE("node set and clustering files round trip through original ids") {
    Graph g = fixtures::barbell();  // original ids 1..6
    std::ostringstream out;
    save_node_set(NodeSet::of({0, 2}), g, out);
    std::istringstream in(out.str());
    NodeSet s = load_node_set(in, g);
    CHECK(s.ids == std::vector<NodeId>{0, 2});

    std::istringstream unknown("1\n99\n");
    CHECK_THROWS_AS(load_node_set(unknown, g), ParseError);

    Clustering c = Clustering::from_labels({0, 0, 0, 1, 1, 1});
    std::ostringstream cout_;
    save_clustering(c, g, cout_);
    std::istringstream cin_(cout_.str());
    Clustering back = load_clustering(cin_, g);
    CHECK(back.labels == c.labels);

    std::istringstream partial("1\t0\n2\t0\n");
    CHECK_THROWS_AS(load_clustering(partial, g), ParseError);
}
