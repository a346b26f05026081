// Wall-time comparison of the OpenMP kernels against their serial reference
// implementations, plus an agreement check on every pair. Build and run the
// bench_kernels target directly; it is intentionally not a ctest entry.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "resfit/community.hpp"
#include "resfit/fitness.hpp"
#include "resfit/graph.hpp"
#include "resfit/lambdacc.hpp"
#include "resfit/local.hpp"
#include "resfit/metric_lp.hpp"
#include "resfit/prng.hpp"
#include "resfit/subset_scan.hpp"
#include "resfit/synth.hpp"

using namespace resfit;

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<std::int64_t, std::int64_t>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) e.push_back({u, v});
    for (int u = 1; u < n; ++u) e.push_back({u - 1, u});
    return Graph::from_edges(e);
}

void report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
                serial / parallel, match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads available: %d\n", threads);
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        Graph g = random_graph(34, 0.18, 9);
        std::vector<NodeId> ids;
        for (NodeId u = 0; u < 22; ++u) ids.push_back(u);
        NodeSet r = NodeSet::of(ids);
        std::vector<std::int64_t> ts, tp;
        double s = time_once([&] { ts = min_cut_by_volume_serial(g, r); });
        double p = time_once([&] { tp = min_cut_by_volume(g, r); });
        report("subset scan |R|=22", s, p, ts == tp);
    }

    {
        Graph g = random_graph(11, 0.35, 10);
        BruteForceResult bs, bp;
        double s = time_once([&] { bs = brute_force_opt_serial(g, 0.3, WeightMode::Standard); });
        double p = time_once([&] { bp = brute_force_opt(g, 0.3, WeightMode::Standard); });
        report("partition enumeration n=11", s, p,
               bs.value == bp.value && same_partition(bs.clustering, bp.clustering));
    }

    {
        SynthResult syn = planted_partition(3, 6, 0.55, 0.08, 5);
        Validity v = validity_interval(syn.graph, WeightMode::DegreeWeighted);
        std::vector<double> grid = uniform_grid(v.hi / 100.0, 0.9 * v.hi, 8);
        MetricLpOptions lp;
        std::vector<GSample> gs, gp;
        double s = time_once(
            [&] { gs = sample_g_grid(syn.graph, WeightMode::DegreeWeighted, grid, lp, "", 1); });
        double p = time_once([&] {
            gp = sample_g_grid(syn.graph, WeightMode::DegreeWeighted, grid, lp, "", threads);
        });
        bool match = gs.size() == gp.size();
        for (std::size_t i = 0; match && i < gs.size(); ++i)
            match = gs[i].lower == gp[i].lower && gs[i].upper == gp[i].upper;
        report("relaxation grid n=18", s, p, match);
    }

    {
        Graph g = random_graph(26, 0.22, 11);
        std::vector<NodeId> ids;
        for (NodeId u = 0; u < 12; ++u) ids.push_back(u);
        auto inst = std::make_shared<LocalInstance>(g, NodeSet::of(ids),
                                                    std::numeric_limits<double>::infinity());
        LocalFitness lf = make_local_fitness(inst, NodeSet::of({0, 1, 2, 3, 4}));
        GridResult rs, rp;
        {
            FitnessFunction fn = to_fitness_function(lf);
            double s = time_once([&] { rs = grid_minimize(fn, 65, 1); });
            FitnessFunction fn2 = to_fitness_function(lf);
            double p = time_once([&] { rp = grid_minimize(fn2, 65, threads); });
            bool match = rs.argmin == rp.argmin && rs.curve.size() == rp.curve.size();
            for (std::size_t i = 0; match && i < rs.curve.size(); ++i)
                match = rs.curve[i].p == rp.curve[i].p;
            report("fitness grid, flow G", s, p, match);
        }
    }

    return 0;
}
