#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "resfit/community.hpp"
#include "resfit/lambdacc.hpp"
#include "resfit/synth.hpp"

using namespace resfit;

static Clustering labels(std::vector<std::int32_t> v) {
    return Clustering::from_labels(std::move(v));
}

TEST_CASE("adjusted Rand index on frozen cases") {
    CHECK(ari(labels({0, 0, 1, 1}), labels({1, 1, 0, 0})) == doctest::Approx(1.0));
    CHECK(ari(labels({0, 0, 1, 1}), labels({0, 1, 0, 1})) == doctest::Approx(-0.5));
    CHECK(ari(labels({0, 0, 1, 1}), labels({0, 0, 0, 1})) == doctest::Approx(0.0));
    // degenerate pairs: the adjustment denominator vanishes
    CHECK(ari(labels({0, 0, 0}), labels({0, 0, 0})) == doctest::Approx(1.0));
    CHECK(ari(labels({0, 0, 0}), labels({0, 1, 2})) == doctest::Approx(0.0));
    CHECK(ari(labels({0, 1, 2}), labels({2, 1, 0})) == doctest::Approx(1.0));
}

TEST_CASE("normalized mutual information on frozen cases") {
    CHECK(nmi(labels({0, 0, 1, 1}), labels({1, 1, 0, 0})) == doctest::Approx(1.0));
    CHECK(nmi(labels({0, 0, 1, 1}), labels({0, 1, 0, 1})) == doctest::Approx(0.0));
    CHECK(nmi(labels({0, 0, 1, 1}), labels({0, 0, 0, 1})) ==
          doctest::Approx(0.3437110184854508).epsilon(1e-12));
    // two zero-entropy partitions compare as identical
    CHECK(nmi(labels({0, 0, 0}), labels({0, 0, 0})) == doctest::Approx(1.0));
    CHECK(nmi(labels({0, 0, 0}), labels({0, 0, 1})) == doctest::Approx(0.0));
}

TEST_CASE("set F1") {
    CHECK(f1_set(NodeSet::of({0, 1, 2}), NodeSet::of({1, 2, 3})) == doctest::Approx(2.0 / 3.0));
    CHECK(f1_set(NodeSet::of({0, 1}), NodeSet::of({0, 1})) == doctest::Approx(1.0));
    CHECK(f1_set(NodeSet::of({}), NodeSet::of({0})) == doctest::Approx(0.0));
    CHECK(f1_set(NodeSet::of({0}), NodeSet::of({})) == doctest::Approx(0.0));
}

TEST_CASE("same_partition ignores label names") {
    CHECK(same_partition(labels({0, 0, 1}), labels({5, 5, 2})));
    CHECK_FALSE(same_partition(labels({0, 0, 1}), labels({0, 1, 1})));
}

// the greedy objective value of a fixed clustering
static double h_value(const Graph& g, const Clustering& c, double lambda) {
    double intra = 0;
    for (NodeId u = 0; u < g.n(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && c.labels[u] == c.labels[v]) intra += 1.0;
    std::vector<double> volc(c.k, 0.0);
    for (NodeId u = 0; u < g.n(); ++u) volc[c.labels[u]] += g.degree(u);
    double pen = 0;
    for (double v : volc) pen += v * v;
    return intra - 0.5 * lambda * pen;
}

TEST_CASE("louvain recovers the barbell triangles at the modularity resolution") {
    Graph g = fixtures::barbell();
    double lam = 1.0 / 14.0;
    LouvainResult r = louvain_best(g, lam, 1, 4);
    CHECK(ari(r.clustering, labels({0, 0, 0, 1, 1, 1})) == doctest::Approx(1.0));
    CHECK(r.objective_h == doctest::Approx(h_value(g, r.clustering, lam)).epsilon(1e-12));
}

TEST_CASE("louvain is deterministic for a fixed seed") {
    Graph g = fixtures::random_connected(24, 0.2, 99);
    LouvainResult a = louvain(g, 0.02, 7);
    LouvainResult b = louvain(g, 0.02, 7);
    CHECK(a.clustering.labels == b.clustering.labels);
    CHECK(a.objective_h == b.objective_h);
}

TEST_CASE("restarted louvain reaches the exhaustive optimum on small graphs") {
    for (auto& fx : fixtures::small_suite_up_to(8)) {
        if (fx.g.n() < 3) continue;
        double lam = 1.0 / (double)fx.g.total_volume();
        BruteForceResult best = brute_force_opt(fx.g, lam, WeightMode::DegreeWeighted);
        LouvainResult lv = louvain_best(fx.g, lam, 3, 8);
        double h_opt = h_value(fx.g, best.clustering, lam);
        CHECK(lv.objective_h <= h_opt + 1e-9);
        CHECK(lv.objective_h == doctest::Approx(h_opt).epsilon(1e-9));
    }
}

TEST_CASE("ring of small cliques shows the resolution limit and its cure") {
    SynthResult syn = ring_of_cliques(24, 3);
    const Graph& g = syn.graph;
    double modres = 1.0 / (double)g.total_volume();

    LouvainResult merged = louvain_best(g, modres, 1, 8);
    CHECK(ari(merged.clustering, syn.planted) < 1.0);
    // merging adjacent cliques genuinely beats the planted clustering here
    CHECK(merged.objective_h > h_value(g, syn.planted, modres) + 1e-9);

    // a finer resolution restores the planted cliques
    LouvainResult fine = louvain_best(g, 1.0 / 40.0, 1, 8);
    CHECK(ari(fine.clustering, syn.planted) == doctest::Approx(1.0));
}
