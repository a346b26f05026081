#pragma once

#include <cstdint>

#include "resfit/graph.hpp"

namespace resfit {

struct SynthResult {
    Graph graph;
    Clustering planted;
};

// cliques >= 3 complete graphs of clique_size >= 3 nodes joined in a cycle.
// Clique i occupies ids [i*k, (i+1)*k); its ring edge joins node i*k to node
// ((i+1) mod cliques)*k + 1, so no node carries more than one ring edge.
SynthResult ring_of_cliques(int cliques, int clique_size);

// groups * group_size nodes. Every intra-group pair becomes an edge with
// probability p_in, every cross-group pair with probability p_out; draws are
// consumed in fixed pair order, so a seed pins the graph exactly. A node left
// isolated is joined to the next node of its group, which is why group_size
// must be at least 2.
SynthResult planted_partition(int groups, int group_size, double p_in,
                              double p_out, std::uint64_t seed);

}  // namespace resfit
