#include "resfit/synth.hpp"

#include <stdexcept>
#include <vector>

#include "resfit/prng.hpp"

namespace resfit {

SynthResult ring_of_cliques(int cliques, int clique_size) {
    if (cliques < 3) throw std::invalid_argument("need at least 3 cliques");
    if (clique_size < 3) throw std::invalid_argument("cliques need at least 3 nodes");

    const int c = cliques;
    const int k = clique_size;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(static_cast<std::size_t>(c) * k * (k - 1) / 2 + c);
    for (int i = 0; i < c; ++i) {
        int base = i * k;
        for (int u = 0; u < k; ++u) {
            for (int v = u + 1; v < k; ++v) edges.push_back({base + u, base + v});
        }
        edges.push_back({base, ((i + 1) % c) * k + 1});
    }

    SynthResult out;
    out.graph = Graph::from_edges(edges);
    std::vector<std::int32_t> labels(static_cast<std::size_t>(c) * k);
    for (std::size_t v = 0; v < labels.size(); ++v) {
        labels[v] = static_cast<std::int32_t>(v / static_cast<std::size_t>(k));
    }
    out.planted = Clustering::from_labels(std::move(labels));
    return out;
}

SynthResult planted_partition(int groups, int group_size, double p_in,
                              double p_out, std::uint64_t seed) {
    if (groups < 1) throw std::invalid_argument("need at least one group");
    if (group_size < 2) {
        throw std::invalid_argument(
            "groups of one node cannot be patched out of isolation");
    }
    if (!(p_in >= 0 && p_in <= 1) || !(p_out >= 0 && p_out <= 1)) {
        throw std::invalid_argument("probabilities must lie in [0, 1]");
    }

    const int n = groups * group_size;
    Rng rng(seed);
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<int> degree(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double p = (u / group_size == v / group_size) ? p_in : p_out;
            if (rng.next_unit() < p) {
                edges.push_back({u, v});
                ++degree[u];
                ++degree[v];
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        if (degree[u] > 0) continue;
        int base = (u / group_size) * group_size;
        int partner = base + (u - base + 1) % group_size;
        edges.push_back({u, partner});
        ++degree[u];
        ++degree[partner];
    }

    SynthResult out;
    out.graph = Graph::from_edges(edges);
    std::vector<std::int32_t> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v / group_size;
    out.planted = Clustering::from_labels(std::move(labels));
    return out;
}

}  // namespace resfit
