#pragma once

#include <cstdint>
#include <vector>

#include "resfit/graph.hpp"

namespace resfit {

struct CutResult {
    double value = 0.0;          // capacity crossing the returned cut
    double flow = 0.0;           // max-flow value accumulated by augmentation
    std::vector<char> in_source_side;  // minimal source side, excludes s itself
    std::vector<char> in_source_side_max;  // maximal source side (complement of t's side)
};

// Dinic max-flow on a directed network with real capacities. Arcs are stored
// in pairs: arc i and i^1 are mutual reverses.
class FlowNetwork {
public:
    explicit FlowNetwork(int num_nodes);

    // Adds arc u->v with capacity cap and reverse capacity rev_cap (rev_cap > 0
    // models an undirected edge). Returns the arc index.
    int add_arc(int u, int v, double cap, double rev_cap = 0.0);

    int num_nodes() const { return static_cast<int>(head_.size()); }
    int num_arcs() const { return static_cast<int>(to_.size()); }

    // Solves max flow s->t and returns the canonical minimum cut: the minimal
    // source side (nodes residual-reachable from s) plus the maximal one.
    CutResult max_flow_min_cut(int s, int t);

    // Residual capacity of arc index a (valid after max_flow_min_cut).
    double residual(int a) const { return cap_[a]; }
    double capacity(int a) const { return orig_cap_[a]; }
    // Net flow pushed along arc a (= orig_cap - residual).
    double flow_on(int a) const { return orig_cap_[a] - cap_[a]; }
    int arc_from(int a) const { return to_[a ^ 1]; }
    int arc_to(int a) const { return to_[a]; }

private:
    bool bfs_levels(int s, int t);
    double dfs_push(int u, int t, double limit);

    std::vector<std::vector<int>> head_;  // arc ids per node
    std::vector<int> to_;
    std::vector<double> cap_;       // residual
    std::vector<double> orig_cap_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
    double eps_ = 1e-12;
};

// Auxiliary network for the localized objective
//   f_alpha(S) = cut(S) + alpha*vol(R & ~S) + alpha*eps*vol(~R & S).
// Layout: graph nodes keep their ids, s = n, t = n+1. Arcs: s->v with
// capacity alpha*deg(v) for v in R; v->t with capacity alpha*eps*deg(v) for v
// outside R; every graph edge becomes a unit-capacity arc in both directions.
// With eps = +infinity the complement of R is contracted into t: only R's
// nodes remain, and each v in R gets an arc v->t with capacity equal to its
// edge count into the complement. Minimum cuts then correspond to minimizers
// of f_alpha over S (subsets of R when eps is infinite).
struct LocalNetwork {
    FlowNetwork net;
    int s = -1;
    int t = -1;
    std::vector<NodeId> node_of;  // network node index -> graph node (R only when contracted)
    std::vector<int> index_of;    // graph node -> network node, -1 if contracted
};

LocalNetwork build_local_network(const Graph& g, const NodeSet& r, double alpha, double eps);

}  // namespace resfit
