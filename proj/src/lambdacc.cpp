#include "resfit/lambdacc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resfit {

WeightMode parse_weight_mode(const std::string& name) {
    if (name == "standard") return WeightMode::Standard;
    if (name == "degree") return WeightMode::DegreeWeighted;
    throw std::invalid_argument("unknown weight mode '" + name +
                                "' (expected standard or degree)");
}

std::string weight_mode_name(WeightMode mode) {
    return mode == WeightMode::Standard ? "standard" : "degree";
}

Validity validity_interval(const Graph& g, WeightMode mode) {
    Validity v;
    v.lo = 0;
    if (mode == WeightMode::Standard) {
        v.hi = 1.0;
        v.hi_inclusive = false;
        return v;
    }
    std::int64_t dmax = g.max_degree();
    if (dmax == 0) throw std::invalid_argument("graph has no edges");
    v.hi = 1.0 / static_cast<double>(dmax * dmax);
    v.hi_inclusive = true;
    return v;
}

namespace {

std::int64_t node_weight(const Graph& g, NodeId u, WeightMode mode) {
    return mode == WeightMode::Standard ? 1 : g.degree(u);
}

}  // namespace

double MistakeProfile::eval_linear(double lambda) const {
    if (!validity.contains(lambda)) {
        throw std::domain_error(
            "resolution " + std::to_string(lambda) +
            " lies outside the interval where all edges keep nonnegative "
            "weight; use the exact evaluator instead");
    }
    return static_cast<double>(a) + lambda * static_cast<double>(b);
}

double MistakeProfile::eval_exact(double lambda) const {
    if (!(lambda > 0)) throw std::domain_error("resolution must be positive");
    double v = static_cast<double>(a) + lambda * static_cast<double>(b);
    // Edges whose weight flipped sign each add lambda*prod - 1 regardless of
    // the clustering. Products are sorted ascending; flipping means
    // lambda*prod > 1 (the boundary contributes 0 either way).
    auto first_flipped = std::partition_point(
        edge_products.begin(), edge_products.end(), [lambda](std::int64_t p) {
            return lambda * static_cast<double>(p) <= 1.0;
        });
    std::size_t idx =
        static_cast<std::size_t>(first_flipped - edge_products.begin());
    std::int64_t count = static_cast<std::int64_t>(edge_products.size() - idx);
    if (count > 0) {
        std::int64_t sum = edge_product_suffix[idx];
        v += lambda * static_cast<double>(sum) - static_cast<double>(count);
    }
    return v;
}

MistakeProfile mistake_profile(const Graph& g, const Clustering& c,
                               WeightMode mode) {
    if (static_cast<int>(c.labels.size()) != g.n()) {
        throw std::invalid_argument("clustering does not cover the graph");
    }
    MistakeProfile mp;
    mp.mode = mode;
    mp.validity = validity_interval(g, mode);

    std::vector<std::int64_t> size(c.k, 0), wsum(c.k, 0), w2sum(c.k, 0);
    for (NodeId u = 0; u < g.n(); ++u) {
        std::int64_t w = node_weight(g, u, mode);
        int lab = c.labels[u];
        ++size[lab];
        wsum[lab] += w;
        w2sum[lab] += w * w;
    }

    std::int64_t intra_edges = 0;
    std::int64_t intra_edge_w = 0;
    std::int64_t cut_edge_w = 0;
    mp.edge_products.reserve(static_cast<std::size_t>(g.m()));
    for (NodeId u = 0; u < g.n(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u >= v) continue;
            std::int64_t prod = node_weight(g, u, mode) * node_weight(g, v, mode);
            mp.edge_products.push_back(prod);
            if (c.labels[u] == c.labels[v]) {
                ++intra_edges;
                intra_edge_w += prod;
            } else {
                ++mp.p_x;
                cut_edge_w += prod;
            }
        }
    }

    std::int64_t intra_pairs = 0;
    std::int64_t intra_pair_w = 0;
    for (int k = 0; k < c.k; ++k) {
        intra_pairs += size[k] * (size[k] - 1) / 2;
        intra_pair_w += (wsum[k] * wsum[k] - w2sum[k]) / 2;
    }
    mp.n_x = intra_pairs - intra_edges;
    mp.a = mp.p_x;
    mp.b = (intra_pair_w - intra_edge_w) - cut_edge_w;

    std::sort(mp.edge_products.begin(), mp.edge_products.end());
    mp.edge_product_suffix.assign(mp.edge_products.size() + 1, 0);
    for (std::size_t i = mp.edge_products.size(); i-- > 0;) {
        mp.edge_product_suffix[i] =
            mp.edge_product_suffix[i + 1] + mp.edge_products[i];
    }
    return mp;
}

double eval_cc_objective(const Graph& g, const Clustering& c, double lambda,
                         WeightMode mode) {
    if (static_cast<int>(c.labels.size()) != g.n()) {
        throw std::invalid_argument("clustering does not cover the graph");
    }
    if (!(lambda > 0)) throw std::domain_error("resolution must be positive");

    std::vector<std::int64_t> wsum(c.k, 0), w2sum(c.k, 0);
    for (NodeId u = 0; u < g.n(); ++u) {
        std::int64_t w = node_weight(g, u, mode);
        wsum[c.labels[u]] += w;
        w2sum[c.labels[u]] += w * w;
    }
    // pool: weighted count of intra-cluster pairs, edges subtracted below
    std::int64_t pool = 0;
    for (int k = 0; k < c.k; ++k) pool += (wsum[k] * wsum[k] - w2sum[k]) / 2;

    double obj = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u >= v) continue;
            std::int64_t prod = node_weight(g, u, mode) * node_weight(g, v, mode);
            bool together = c.labels[u] == c.labels[v];
            if (together) pool -= prod;
            double w = 1.0 - lambda * static_cast<double>(prod);
            if (together) {
                if (w < 0) obj -= w;
            } else {
                if (w > 0) obj += w;
            }
        }
    }
    obj += lambda * static_cast<double>(pool);
    return obj;
}

std::int64_t cc_objective_key(const Graph& g, const Clustering& c) {
    if (static_cast<int>(c.labels.size()) != g.n()) {
        throw std::invalid_argument("clustering does not cover the graph");
    }
    std::int64_t two_m = g.total_volume();
    if (two_m == 0) throw std::invalid_argument("graph has no edges");

    std::vector<std::int64_t> vol(c.k, 0), d2(c.k, 0);
    for (NodeId u = 0; u < g.n(); ++u) {
        std::int64_t d = g.degree(u);
        vol[c.labels[u]] += d;
        d2[c.labels[u]] += d * d;
    }
    std::int64_t pool = 0;
    for (int k = 0; k < c.k; ++k) pool += (vol[k] * vol[k] - d2[k]) / 2;

    // Degree-weighted objective at resolution 1/(2m), scaled by 4m so every
    // term is an integer: cut positive edge 4m - 2*d(u)d(v), intra negative
    // edge 2*d(u)d(v) - 4m, intra non-edge pair 2*d(u)d(v).
    std::int64_t key = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u >= v) continue;
            std::int64_t dd =
                static_cast<std::int64_t>(g.degree(u)) * g.degree(v);
            bool together = c.labels[u] == c.labels[v];
            if (together) {
                pool -= dd;
                if (dd > two_m) key += 2 * dd - 2 * two_m;
            } else if (dd <= two_m) {
                key += 2 * two_m - 2 * dd;
            }
        }
    }
    key += 2 * pool;
    return key;
}

std::int64_t modularity_key(const Graph& g, const Clustering& c) {
    if (static_cast<int>(c.labels.size()) != g.n()) {
        throw std::invalid_argument("clustering does not cover the graph");
    }
    std::int64_t two_m = g.total_volume();
    if (two_m == 0) throw std::invalid_argument("graph has no edges");

    std::vector<std::int64_t> vol(c.k, 0);
    std::int64_t intra_edges = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        vol[c.labels[u]] += g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            if (u < v && c.labels[u] == c.labels[v]) ++intra_edges;
        }
    }
    std::int64_t key = 2 * two_m * intra_edges;
    for (int k = 0; k < c.k; ++k) key -= vol[k] * vol[k];
    return key;
}

double modularity(const Graph& g, const Clustering& c) {
    std::int64_t two_m = g.total_volume();
    return static_cast<double>(modularity_key(g, c)) /
           (static_cast<double>(two_m) * static_cast<double>(two_m));
}

namespace {

// Pairwise costs for the exhaustive search: cost of placing u and v together
// and of separating them. Both are nonnegative, so partial sums only grow.
struct PairCosts {
    int n = 0;
    std::vector<double> together;
    std::vector<double> separate;

    double tog(int u, int v) const { return together[static_cast<std::size_t>(u) * n + v]; }
    double sep(int u, int v) const { return separate[static_cast<std::size_t>(u) * n + v]; }
};

PairCosts make_pair_costs(const Graph& g, double lambda, WeightMode mode) {
    PairCosts pc;
    pc.n = g.n();
    pc.together.assign(static_cast<std::size_t>(pc.n) * pc.n, 0.0);
    pc.separate.assign(static_cast<std::size_t>(pc.n) * pc.n, 0.0);
    for (NodeId u = 0; u < g.n(); ++u) {
        for (NodeId v = u + 1; v < g.n(); ++v) {
            double prod = static_cast<double>(node_weight(g, u, mode)) *
                          static_cast<double>(node_weight(g, v, mode));
            double tog;
            double sep;
            if (g.has_edge(u, v)) {
                double w = 1.0 - lambda * prod;
                tog = w < 0 ? -w : 0.0;
                sep = w > 0 ? w : 0.0;
            } else {
                tog = lambda * prod;
                sep = 0.0;
            }
            std::size_t ij = static_cast<std::size_t>(u) * pc.n + v;
            std::size_t ji = static_cast<std::size_t>(v) * pc.n + u;
            pc.together[ij] = pc.together[ji] = tog;
            pc.separate[ij] = pc.separate[ji] = sep;
        }
    }
    return pc;
}

constexpr int kBruteForceMaxNodes = 12;

struct SearchBest {
    double value = std::numeric_limits<double>::infinity();
    std::vector<int> labels;

    // Ties resolve to the lexicographically smallest restricted-growth string,
    // which is also the first one found by in-order enumeration.
    void offer(double v, const std::vector<int>& lab) {
        if (v < value || (v == value && (labels.empty() || lab < labels))) {
            value = v;
            labels = lab;
        }
    }
};

void search(const PairCosts& pc, std::vector<int>& lab, int i, int maxlab,
            double acc, SearchBest& best) {
    if (acc > best.value) return;
    int n = pc.n;
    if (i == n) {
        best.offer(acc, lab);
        return;
    }
    for (int cl = 0; cl <= maxlab + 1; ++cl) {
        double add = 0;
        for (int j = 0; j < i; ++j) {
            add += lab[j] == cl ? pc.tog(j, i) : pc.sep(j, i);
        }
        lab[i] = cl;
        search(pc, lab, i + 1, std::max(maxlab, cl), acc + add, best);
    }
    lab[i] = 0;
}

struct Prefix {
    std::array<int, kBruteForceMaxNodes> lab{};
    int maxlab = 0;
    double acc = 0;
};

void enumerate_prefixes(const PairCosts& pc, std::vector<int>& lab, int i,
                        int depth, int maxlab, double acc,
                        std::vector<Prefix>& out) {
    if (i == depth) {
        Prefix p;
        for (int j = 0; j < depth; ++j) p.lab[j] = lab[j];
        p.maxlab = maxlab;
        p.acc = acc;
        out.push_back(p);
        return;
    }
    for (int cl = 0; cl <= maxlab + 1; ++cl) {
        double add = 0;
        for (int j = 0; j < i; ++j) {
            add += lab[j] == cl ? pc.tog(j, i) : pc.sep(j, i);
        }
        lab[i] = cl;
        enumerate_prefixes(pc, lab, i + 1, depth, std::max(maxlab, cl),
                           acc + add, out);
    }
    lab[i] = 0;
}

BruteForceResult finish(const SearchBest& best) {
    BruteForceResult res;
    res.value = best.value;
    res.clustering = Clustering::from_labels(best.labels);
    return res;
}

}  // namespace

BruteForceResult brute_force_opt_serial(const Graph& g, double lambda,
                                        WeightMode mode) {
    if (g.n() == 0) throw std::invalid_argument("graph has no nodes");
    if (g.n() > kBruteForceMaxNodes) {
        throw std::invalid_argument("exhaustive search is limited to " +
                                    std::to_string(kBruteForceMaxNodes) +
                                    " nodes");
    }
    PairCosts pc = make_pair_costs(g, lambda, mode);
    std::vector<int> lab(g.n(), 0);
    SearchBest best;
    search(pc, lab, 1, 0, 0.0, best);
    return finish(best);
}

BruteForceResult brute_force_opt(const Graph& g, double lambda,
                                 WeightMode mode) {
#ifndef _OPENMP
    return brute_force_opt_serial(g, lambda, mode);
#else
    if (g.n() == 0) throw std::invalid_argument("graph has no nodes");
    if (g.n() > kBruteForceMaxNodes) {
        throw std::invalid_argument("exhaustive search is limited to " +
                                    std::to_string(kBruteForceMaxNodes) +
                                    " nodes");
    }
    PairCosts pc = make_pair_costs(g, lambda, mode);
    int depth = std::min(g.n(), 7);
    std::vector<Prefix> prefixes;
    {
        std::vector<int> lab(g.n(), 0);
        enumerate_prefixes(pc, lab, 1, depth, 0, 0.0, prefixes);
    }

    int max_threads = omp_get_max_threads();
    std::vector<SearchBest> bests(static_cast<std::size_t>(max_threads));
#pragma omp parallel num_threads(max_threads)
    {
        SearchBest& local = bests[static_cast<std::size_t>(omp_get_thread_num())];
        std::vector<int> lab(g.n(), 0);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(prefixes.size());
             ++pi) {
            const Prefix& p = prefixes[static_cast<std::size_t>(pi)];
            for (int j = 0; j < depth; ++j) lab[j] = p.lab[j];
            search(pc, lab, depth, p.maxlab, p.acc, local);
        }
    }
    // merging by (value, labels) makes the result independent of scheduling
    SearchBest best;
    for (const SearchBest& b : bests) {
        if (!b.labels.empty()) best.offer(b.value, b.labels);
    }
    return finish(best);
#endif
}

}  // namespace resfit
