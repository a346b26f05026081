#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resfit/graph.hpp"

namespace resfit {

// Node weighting for the pairwise clustering objective. Standard weighs every
// pair 1; DegreeWeighted weighs pair (u, v) by deg(u)*deg(v).
enum class WeightMode { Standard, DegreeWeighted };

WeightMode parse_weight_mode(const std::string& name);
std::string weight_mode_name(WeightMode mode);

// Open/half-open interval of resolution values on which every edge keeps a
// nonnegative weight 1 - lambda*w(u)*w(v), so the objective stays the linear
// form a + lambda*b for a fixed clustering.
struct Validity {
    double lo = 0;  // exclusive
    double hi = 0;
    bool hi_inclusive = false;

    bool contains(double lambda) const {
        return lambda > lo && (hi_inclusive ? lambda <= hi : lambda < hi);
    }
};

Validity validity_interval(const Graph& g, WeightMode mode);

// Mistake counts of a fixed clustering: cut edges (p_x) and intra-cluster
// non-adjacent pairs (n_x), plus the weighted linear form
//   F(lambda) = a + lambda*b,
// a = p_x, b = sum of pair weights over intra non-edges minus over cut edges.
// edge_products holds the sorted pair weights of all edges so the objective
// can also be evaluated exactly outside the validity interval, where edges
// with lambda*w(u)*w(v) > 1 change sign: each such edge shifts the objective
// by lambda*w(u)*w(v) - 1 independent of the clustering.
struct MistakeProfile {
    WeightMode mode = WeightMode::Standard;
    std::int64_t p_x = 0;
    std::int64_t n_x = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    Validity validity;
    std::vector<std::int64_t> edge_products;
    std::vector<std::int64_t> edge_product_suffix;  // suffix sums of edge_products

    // Linear form; throws std::domain_error outside the validity interval.
    double eval_linear(double lambda) const;
    // Exact objective for any lambda > 0, including sign-flipped edges.
    double eval_exact(double lambda) const;
};

MistakeProfile mistake_profile(const Graph& g, const Clustering& c, WeightMode mode);

// Exact objective value of a clustering at a given resolution (handles
// sign-flipped edges; any lambda > 0).
double eval_cc_objective(const Graph& g, const Clustering& c, double lambda,
                         WeightMode mode);

// Integer comparison keys at the resolution 1/(2m) where the degree-weighted
// objective and modularity rank clusterings identically:
//   cc_objective_key = 4m * objective,  modularity_key = 4m^2 * modularity.
std::int64_t cc_objective_key(const Graph& g, const Clustering& c);
std::int64_t modularity_key(const Graph& g, const Clustering& c);

double modularity(const Graph& g, const Clustering& c);

struct BruteForceResult {
    Clustering clustering;
    double value = 0;
};

// Exact optimum over all partitions (n <= 12). Ties resolve to the first
// partition in restricted-growth enumeration order; the parallel version
// reproduces the serial result bit for bit.
BruteForceResult brute_force_opt(const Graph& g, double lambda, WeightMode mode);
BruteForceResult brute_force_opt_serial(const Graph& g, double lambda,
                                        WeightMode mode);

}  // namespace resfit
