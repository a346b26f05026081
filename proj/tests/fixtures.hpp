#pragma once

// Small named graphs shared by the unit tests and the acceptance checks, plus
// helpers for exhaustive cross-checks (partition enumeration, random connected
// graphs). Node ids are 0-based unless a builder says otherwise.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "resfit/graph.hpp"
#include "resfit/prng.hpp"
#include "resfit/synth.hpp"

namespace fixtures {

using Edges = std::vector<std::pair<std::int64_t, std::int64_t>>;

inline resfit::Graph from_pairs(Edges e) { return resfit::Graph::from_edges(e); }

inline resfit::Graph path(int n) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_pairs(std::move(e));
}

inline resfit::Graph cycle(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return from_pairs(std::move(e));
}

inline resfit::Graph complete(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return from_pairs(std::move(e));
}

// hub 0 plus `leaves` pendant nodes
inline resfit::Graph star(int leaves) {
    Edges e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return from_pairs(std::move(e));
}

inline resfit::Graph complete_bipartite(int a, int b) {
    Edges e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return from_pairs(std::move(e));
}

// Two triangles {1,2,3} and {4,5,6} joined by the edge 3-4. Original ids are
// 1-based on purpose: compact id = original id - 1, so R = {1,2,3} in file
// terms is {0,1,2} here. cut({0,1,2}) = 1, vol = 7, conductance = 1/7.
inline resfit::Graph barbell() {
    return from_pairs({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {3, 4}});
}

// two triangles sharing node 0
inline resfit::Graph bowtie() {
    return from_pairs({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline resfit::Graph k4_pendant() {
    return from_pairs({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

// 3-dimensional hypercube
inline resfit::Graph cube() {
    Edges e;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (int v = u ^ (1 << b); u < v) e.push_back({u, v});
    return from_pairs(std::move(e));
}

// hub 0 joined to every node of the cycle 1..n-1
inline resfit::Graph wheel(int n) {
    Edges e;
    for (int i = 1; i < n; ++i) {
        e.push_back({0, i});
        e.push_back({i, i == n - 1 ? 1 : i + 1});
    }
    return from_pairs(std::move(e));
}

// K4 on 0..3 with the tail 3-4-5-6-7
inline resfit::Graph lollipop() {
    Edges e;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
    for (int i = 3; i < 7; ++i) e.push_back({i, i + 1});
    return from_pairs(std::move(e));
}

// adjacent hubs 0 and 1 with three leaves each
inline resfit::Graph double_star() {
    return from_pairs({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
}

inline resfit::Graph grid_graph(int rows, int cols) {
    Edges e;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return from_pairs(std::move(e));
}

// G(n, p) made connected by joining consecutive components at their smallest
// member ids; those bridges cannot duplicate existing edges.
inline resfit::Graph random_connected(int n, double p, std::uint64_t seed) {
    resfit::Rng rng(seed);
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) e.push_back({u, v});
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : e) parent[find((int)u)] = find((int)v);
    std::vector<int> reps;
    for (int u = 0; u < n; ++u)
        if (find(u) == u) reps.push_back(u);
    // reps are component-minimum ids because smaller ids are scanned first
    for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
        e.push_back({reps[i], reps[i + 1]});
        parent[find(reps[i])] = find(reps[i + 1]);
    }
    return from_pairs(std::move(e));
}

struct Named {
    std::string name;
    resfit::Graph g;
};

// Connected graphs with at most 9 nodes; the first block stays within 8 nodes
// so exact LP cross-checks can use all of them.
inline std::vector<Named> small_suite() {
    std::vector<Named> v;
    v.push_back({"path3", path(3)});
    v.push_back({"path5", path(5)});
    v.push_back({"path8", path(8)});
    v.push_back({"cycle4", cycle(4)});
    v.push_back({"cycle6", cycle(6)});
    v.push_back({"k4", complete(4)});
    v.push_back({"k7", complete(7)});
    v.push_back({"star6", star(6)});
    v.push_back({"barbell", barbell()});
    v.push_back({"bowtie", bowtie()});
    v.push_back({"k4_pendant", k4_pendant()});
    v.push_back({"cube", cube()});
    v.push_back({"wheel8", wheel(8)});
    v.push_back({"kb33", complete_bipartite(3, 3)});
    v.push_back({"kb23", complete_bipartite(2, 3)});
    v.push_back({"lollipop", lollipop()});
    v.push_back({"double_star", double_star()});
    v.push_back({"rand8a", random_connected(8, 0.40, 11)});
    v.push_back({"rand8b", random_connected(8, 0.55, 22)});
    v.push_back({"path9", path(9)});
    v.push_back({"cycle9", cycle(9)});
    v.push_back({"k9", complete(9)});
    v.push_back({"star8", star(8)});
    v.push_back({"grid33", grid_graph(3, 3)});
    v.push_back({"ring33", resfit::ring_of_cliques(3, 3).graph});
    v.push_back({"rand9a", random_connected(9, 0.35, 33)});
    v.push_back({"rand9b", random_connected(9, 0.50, 44)});
    return v;
}

inline std::vector<Named> small_suite_up_to(int max_n) {
    std::vector<Named> v;
    for (auto& f : small_suite())
        if (f.g.n() <= max_n) v.push_back(std::move(f));
    return v;
}

namespace detail {
template <class F>
void partitions_rec(std::vector<std::int32_t>& lab, std::size_t i, std::int32_t used, F& fn) {
    if (i == lab.size()) {
        fn(const_cast<const std::vector<std::int32_t>&>(lab));
        return;
    }
    for (std::int32_t c = 0; c <= used; ++c) {
        lab[i] = c;
        partitions_rec(lab, i + 1, c == used ? used + 1 : used, fn);
    }
}
}  // namespace detail

// All set partitions of {0..n-1} in restricted-growth order; labels arrive in
// canonical first-appearance form, so they can be compared directly.
template <class F>
void for_each_partition(int n, F&& fn) {
    if (n <= 0) return;
    std::vector<std::int32_t> lab(n, 0);
    detail::partitions_rec(lab, 1, 1, fn);
}

}  // namespace fixtures
