#pragma once

#include <cstdint>

#include "resfit/graph.hpp"

namespace resfit {

// Greedy multilevel clusterer maximizing
//   H(C) = (intra-cluster edges) - (lambda/2) * sum_c vol(c)^2,
// which orders clusterings exactly like the degree-weighted pairwise
// objective at resolution lambda (and like modularity when
// lambda = 1/(2m)). Sequential and deterministic for a fixed seed: node
// visit order is the only randomized choice.
struct LouvainResult {
    Clustering clustering;
    double objective_h = 0;
    int levels = 0;
};

LouvainResult louvain(const Graph& g, double lambda, std::uint64_t seed);

// Best of `restarts` seeded runs (seed, seed+1, ...); ties keep the earliest.
LouvainResult louvain_best(const Graph& g, double lambda, std::uint64_t seed,
                           int restarts);

// Adjusted Rand index. When the adjustment denominator vanishes (both
// partitions trivial) the value is 1 for identical partitions and 0 otherwise.
double ari(const Clustering& a, const Clustering& b);

// Mutual information normalized by the arithmetic mean of the entropies;
// two zero-entropy partitions compare as identical (1).
double nmi(const Clustering& a, const Clustering& b);

// Harmonic mean of set precision and recall; 0 when either side is empty.
double f1_set(const NodeSet& found, const NodeSet& truth);

bool same_partition(const Clustering& a, const Clustering& b);

}  // namespace resfit
