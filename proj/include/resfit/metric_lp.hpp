#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resfit/graph.hpp"
#include "resfit/lambdacc.hpp"

namespace resfit {

// Costs of the pairwise relaxation at a fixed resolution: value(x) =
// constant + sum_p c[p]*x[p] over pair variables x in [0,1] subject to
// x_ij <= x_ik + x_jk for all triples. Pair (i < j) lives at index
// i*(2n-i-1)/2 + (j-i-1).
struct PairCostVector {
    int n = 0;
    std::vector<double> c;
    double constant = 0;

    static std::size_t pair_index(int n, int i, int j);
    std::size_t pairs() const { return c.size(); }
};

PairCostVector pair_costs(const Graph& g, double lambda, WeightMode mode);

struct MetricLpOptions {
    double tol_abs = 1e-6;   // stop when upper - lower <= max of these two
    double tol_rel = 1e-6;   // ... relative to |upper|
    double gamma0 = 8.0;     // first regularization strength
    double gamma_mult = 8.0; // growth per stage
    int max_stages = 8;
    int max_sweeps = 2000;   // per stage
    // coordinate-ascent passes sharpening the multipliers at each certificate;
    // 0 reports the raw projection multipliers' bound
    int polish_passes = 40;
    // up to this many nodes, a run that misses the tolerance is finished with
    // lazily separated triangle cuts solved exactly; the projection ladder is
    // then also shortened to two stages, since it only has to seed the cuts.
    // The finisher's cost climbs steeply with node count (minutes by n = 60),
    // so the cap trades tight corners against wall time.
    int tighten_cap = 40;
    int node_cap = 400;      // refuse larger graphs
};

struct MetricLpResult {
    double lower = 0;  // certified lower bound on the relaxation optimum
    double upper = 0;  // value of a feasible point (upper bound)
    double gap = 0;
    int sweeps = 0;
    int stages = 0;
    bool converged = false;
};

// Lower-bounds the relaxation by cyclic projection: the regularized point
// -gamma*c is projected onto the triangle halfspaces and the box, and the
// accumulated corrections, scaled by 1/gamma, act as multipliers whose
// Lagrangian value is a valid lower bound for any nonnegative multipliers.
// The reported lower bound is therefore sound even before convergence; the
// gap versus a repaired feasible point drives termination. Instances within
// tighten_cap that still miss the tolerance are handed to an exact finisher
// that separates triangle cuts lazily, so their bounds are tight to floating
// point rather than to the projection's plateau.
MetricLpResult solve_metric_lp(const Graph& g, double lambda, WeightMode mode,
                               const MetricLpOptions& opt = {});

// Exact optimum by dense simplex over all triangle rows; n <= 8 only.
double exact_metric_lp(const Graph& g, double lambda, WeightMode mode);

struct GSample {
    double lambda = 0;
    double lower = 0;
    double upper = 0;
};

// Relaxation bounds on a grid of resolutions. If cache_dir is nonempty,
// results are keyed by (graph hash, mode, tolerances) and reused across runs.
// jobs > 1 solves distinct grid points concurrently; results are identical to
// the serial ones because each solve is independent and deterministic.
std::vector<GSample> sample_g_grid(const Graph& g, WeightMode mode,
                                   const std::vector<double>& lambdas,
                                   const MetricLpOptions& opt = {},
                                   const std::string& cache_dir = "",
                                   int jobs = 1);

}  // namespace resfit
