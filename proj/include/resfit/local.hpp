#pragma once

#include <cstdint>
#include <memory>

#include "resfit/fitness.hpp"
#include "resfit/flow.hpp"
#include "resfit/graph.hpp"

namespace resfit {

// Localized clustering instance around a reference set R. eps weighs volume
// picked up outside R; eps = +inf confines candidate sets to subsets of R and
// requires vol(R) <= vol(V \ R).
struct LocalInstance {
    const Graph* g = nullptr;
    NodeSet r;
    std::vector<char> in_r;
    double eps = 0;
    std::int64_t vol_r = 0;
    std::int64_t cut_r = 0;

    LocalInstance(const Graph& graph, NodeSet r_, double eps_);
};

// cut(S) + alpha*vol(R & ~S) + alpha*eps*vol(~R & S); +inf if eps is infinite
// and S leaves R.
double eval_f_alpha(const LocalInstance& inst, const NodeSet& s, double alpha);

struct LocalMinCut {
    double value = 0;
    NodeSet set_min;  // minimal minimizer (canonical)
    NodeSet set_max;  // maximal minimizer
};

// Exact minimizer of f_alpha over candidate sets via max-flow.
LocalMinCut min_f_alpha(const LocalInstance& inst, double alpha);

// cut(S) / (vol(R & S) - eps*vol(~R & S)); requires a positive denominator.
double local_conductance(const LocalInstance& inst, const NodeSet& s);

struct LocalConductanceResult {
    double alpha_star = 0;
    NodeSet best;
    int iterations = 0;
};

// Minimizes the localized conductance by repeated max-flow: starting from
// S = R, alpha is lowered to the conductance of the best set found until the
// minimum of f_alpha equals alpha*vol(R) (within 1e-9 relative), at which
// point no set beats alpha.
LocalConductanceResult solve_min_local_conductance(const LocalInstance& inst);

// Linear numerator for a candidate cluster X: F(alpha) = cut(X) + alpha*slope
// with slope = vol(R\X) + eps*vol(X\R). The search range is [alpha*, cut(R)].
struct LocalFitness {
    std::shared_ptr<LocalInstance> inst;
    NodeSet x;
    double f_const = 0;
    double f_slope = 0;
    double lo = 0;  // alpha*
    double hi = 0;  // cut(R)
    NodeSet alpha_star_set;
};

LocalFitness make_local_fitness(const std::shared_ptr<LocalInstance>& inst, NodeSet x);

// Single-point probe of the ratio.
FitnessQuery query_local_fitness(const LocalFitness& lf, double alpha);

// Fitness function whose G is served by max-flow; safe for concurrent grids.
FitnessFunction to_fitness_function(const LocalFitness& lf, double tau_eq = 1e-9);

}  // namespace resfit
