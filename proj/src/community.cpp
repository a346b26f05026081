#include "resfit/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "resfit/prng.hpp"

namespace resfit {

namespace {

// Aggregated weighted graph used between levels. adj holds no self entries;
// the internal weight of a super node lives in self_loop and its original
// volume in strength (self loops count twice there).
struct WGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;
    std::vector<double> self_loop;
    std::vector<double> strength;
};

WGraph from_graph(const Graph& g) {
    WGraph w;
    w.n = g.n();
    w.adj.resize(w.n);
    w.self_loop.assign(w.n, 0.0);
    w.strength.resize(w.n);
    for (NodeId u = 0; u < g.n(); ++u) {
        w.strength[u] = static_cast<double>(g.degree(u));
        w.adj[u].reserve(g.degree(u));
        for (NodeId v : g.neighbors(u)) w.adj[u].push_back({v, 1.0});
    }
    return w;
}

// One sweep of local moves until no node improves. Returns the labels and
// whether any move happened. Ties keep the current cluster, then the first
// candidate in adjacency order, so the outcome depends only on visit order.
bool one_level(const WGraph& w, double lambda, Rng& rng,
               std::vector<int>& lab) {
    int n = w.n;
    lab.resize(n);
    std::iota(lab.begin(), lab.end(), 0);
    std::vector<double> vol(w.strength);
    std::vector<double> links(n, 0.0);
    std::vector<int> touched;
    touched.reserve(16);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    bool any = false;
    const int max_passes = 100;
    for (int pass = 0; pass < max_passes; ++pass) {
        int moves = 0;
        for (int u : order) {
            int a = lab[u];
            double su = w.strength[u];
            vol[a] -= su;
            for (const auto& [v, wt] : w.adj[u]) {
                int c = lab[v];
                if (links[c] == 0.0) touched.push_back(c);
                links[c] += wt;
            }
            int best = a;
            double best_gain = links[a] - lambda * su * vol[a];
            for (int c : touched) {
                if (c == a) continue;
                double gain = links[c] - lambda * su * vol[c];
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            lab[u] = best;
            vol[best] += su;
            if (best != a) {
                ++moves;
                any = true;
            }
            for (int c : touched) links[c] = 0.0;
            touched.clear();
        }
        if (moves == 0) break;
    }
    return any;
}

// Compacts labels by first appearance; returns the cluster count.
int normalize_labels(std::vector<int>& lab) {
    std::unordered_map<int, int> remap;
    remap.reserve(lab.size());
    int next = 0;
    for (int& l : lab) {
        auto [it, inserted] = remap.insert({l, next});
        if (inserted) ++next;
        l = it->second;
    }
    return next;
}

WGraph aggregate(const WGraph& w, const std::vector<int>& lab, int k) {
    WGraph out;
    out.n = k;
    out.adj.resize(k);
    out.self_loop.assign(k, 0.0);
    out.strength.assign(k, 0.0);
    for (int u = 0; u < w.n; ++u) {
        out.self_loop[lab[u]] += w.self_loop[u];
        out.strength[lab[u]] += w.strength[u];
    }
    std::map<std::pair<int, int>, double> cross;
    for (int u = 0; u < w.n; ++u) {
        for (const auto& [v, wt] : w.adj[u]) {
            if (u > v) continue;
            int cu = lab[u];
            int cv = lab[v];
            if (cu == cv) {
                out.self_loop[cu] += wt;
            } else {
                cross[{std::min(cu, cv), std::max(cu, cv)}] += wt;
            }
        }
    }
    for (const auto& [key, wt] : cross) {
        out.adj[key.first].push_back({key.second, wt});
        out.adj[key.second].push_back({key.first, wt});
    }
    return out;
}

double h_value(const Graph& g, const Clustering& c, double lambda) {
    std::vector<double> vol(c.k, 0.0);
    std::int64_t intra = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        vol[c.labels[u]] += static_cast<double>(g.degree(u));
        for (NodeId v : g.neighbors(u)) {
            if (u < v && c.labels[u] == c.labels[v]) ++intra;
        }
    }
    double h = static_cast<double>(intra);
    for (double v : vol) h -= 0.5 * lambda * v * v;
    return h;
}

}  // namespace

LouvainResult louvain(const Graph& g, double lambda, std::uint64_t seed) {
    if (!(lambda > 0)) throw std::invalid_argument("resolution must be positive");
    if (g.n() == 0) throw std::invalid_argument("graph has no nodes");

    Rng rng(seed);
    WGraph w = from_graph(g);
    std::vector<int> global_lab(g.n());
    std::iota(global_lab.begin(), global_lab.end(), 0);

    LouvainResult res;
    while (true) {
        std::vector<int> lab;
        bool improved = one_level(w, lambda, rng, lab);
        int k = normalize_labels(lab);
        ++res.levels;
        for (int& gl : global_lab) gl = lab[gl];
        if (!improved || k == w.n) break;
        w = aggregate(w, lab, k);
    }

    std::vector<std::int32_t> labels32(global_lab.begin(), global_lab.end());
    res.clustering = Clustering::from_labels(std::move(labels32));
    res.objective_h = h_value(g, res.clustering, lambda);
    return res;
}

LouvainResult louvain_best(const Graph& g, double lambda, std::uint64_t seed,
                           int restarts) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    LouvainResult best;
    for (int r = 0; r < restarts; ++r) {
        LouvainResult cur = louvain(g, lambda, seed + static_cast<std::uint64_t>(r));
        if (r == 0 || cur.objective_h > best.objective_h) best = std::move(cur);
    }
    return best;
}

bool same_partition(const Clustering& a, const Clustering& b) {
    if (a.labels.size() != b.labels.size()) return false;
    Clustering na = Clustering::from_labels(a.labels);
    Clustering nb = Clustering::from_labels(b.labels);
    return na.labels == nb.labels;
}

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace

double ari(const Clustering& a, const Clustering& b) {
    if (a.labels.size() != b.labels.size()) {
        throw std::invalid_argument("partitions cover different node counts");
    }
    std::int64_t n = static_cast<std::int64_t>(a.labels.size());
    if (n == 0) throw std::invalid_argument("empty partitions");
    if (n == 1) return 1.0;  // only one partition of a single node exists

    std::map<std::pair<int, int>, std::int64_t> cont;
    std::vector<std::int64_t> ra(a.k, 0), rb(b.k, 0);
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        ++cont[{a.labels[i], b.labels[i]}];
        ++ra[a.labels[i]];
        ++rb[b.labels[i]];
    }
    std::int64_t sij = 0, sa = 0, sb = 0;
    for (const auto& [key, cnt] : cont) sij += choose2(cnt);
    for (std::int64_t x : ra) sa += choose2(x);
    for (std::int64_t x : rb) sb += choose2(x);
    long double stot = static_cast<long double>(choose2(n));
    long double expected = static_cast<long double>(sa) * sb / stot;
    long double num = static_cast<long double>(sij) - expected;
    long double den = 0.5L * (sa + sb) - expected;
    if (std::abs(static_cast<double>(den)) < 1e-9) {
        return same_partition(a, b) ? 1.0 : 0.0;
    }
    return static_cast<double>(num / den);
}

double nmi(const Clustering& a, const Clustering& b) {
    if (a.labels.size() != b.labels.size()) {
        throw std::invalid_argument("partitions cover different node counts");
    }
    double n = static_cast<double>(a.labels.size());
    if (n == 0) throw std::invalid_argument("empty partitions");

    std::map<std::pair<int, int>, std::int64_t> cont;
    std::vector<std::int64_t> ra(a.k, 0), rb(b.k, 0);
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        ++cont[{a.labels[i], b.labels[i]}];
        ++ra[a.labels[i]];
        ++rb[b.labels[i]];
    }
    double mi = 0;
    for (const auto& [key, cnt] : cont) {
        double pij = cnt / n;
        double pi = ra[key.first] / n;
        double qj = rb[key.second] / n;
        mi += pij * std::log(pij / (pi * qj));
    }
    auto entropy = [n](const std::vector<std::int64_t>& counts) {
        double h = 0;
        for (std::int64_t c : counts) {
            if (c > 0) {
                double p = c / n;
                h -= p * std::log(p);
            }
        }
        return h;
    };
    double ha = entropy(ra);
    double hb = entropy(rb);
    if (ha + hb == 0) return 1.0;  // two single-cluster partitions
    return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

double f1_set(const NodeSet& found, const NodeSet& truth) {
    if (found.empty() || truth.empty()) return 0.0;
    std::vector<NodeId> inter;
    std::set_intersection(found.ids.begin(), found.ids.end(), truth.ids.begin(),
                          truth.ids.end(), std::back_inserter(inter));
    if (inter.empty()) return 0.0;
    double p = static_cast<double>(inter.size()) / static_cast<double>(found.size());
    double r = static_cast<double>(inter.size()) / static_cast<double>(truth.size());
    return 2.0 * p * r / (p + r);
}

}  // namespace resfit
