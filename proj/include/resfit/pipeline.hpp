#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "resfit/fitness.hpp"
#include "resfit/graph.hpp"
#include "resfit/lambdacc.hpp"
#include "resfit/local.hpp"
#include "resfit/metric_lp.hpp"

namespace resfit {

inline constexpr const char* kVersion = "0.1.0";

struct LearnOptions {
    double tol = 1e-4;   // interval width at which halving stops
    double tau_eq = 1e-9;
    int grid_points = 0;  // > 1 adds a uniform scan before the search
    int jobs = 1;
    std::string cache_dir;

    // localized mode
    double eps = std::numeric_limits<double>::infinity();

    // global mode
    WeightMode mode = WeightMode::DegreeWeighted;
    double range_lo = 0;  // 0/0 means: derive a default from the validity interval
    double range_hi = 0;
    MetricLpOptions lp;
};

struct LearnOutcome {
    double range_lo = 0;
    double range_hi = 0;
    BisectionResult bisect;
    bool grid_used = false;
    GridResult grid;
    std::vector<FitnessQuery> queries;  // full evaluation log
    bool audit_ratio_ok = true;   // P >= 1 - tau everywhere
    bool audit_shape_ok = true;   // no strict interior maximum
    std::string audit_message;
};

struct LearnLocalResult {
    double alpha_star = 0;      // minimum localized conductance
    NodeSet alpha_star_set;     // a set attaining it
    double f_const = 0;         // numerator: f_const + alpha * f_slope
    double f_slope = 0;
    LearnOutcome fit;
    NodeSet x;             // the candidate cluster that was fitted
    double phi_x = 0;      // its localized conductance (NaN if undefined)
    NodeSet best_set_min;  // minimizers of the relaxation at the learned alpha
    NodeSet best_set_max;
};

// Fits the penalty alpha for candidate cluster X against reference set R.
LearnLocalResult learn_local(const Graph& g, const NodeSet& r, const NodeSet& x,
                             const LearnOptions& opt);

struct LearnGlobalResult {
    MistakeProfile profile;
    LearnOutcome fit;
};

// Fits the resolution for an example clustering of the whole graph.
LearnGlobalResult learn_global(const Graph& g, const Clustering& example,
                               const LearnOptions& opt);

// Report and manifest serialization ------------------------------------

nlohmann::json to_json(const LearnOutcome& o);
nlohmann::json learn_local_report(const Graph& g, const LearnLocalResult& r);
nlohmann::json learn_global_report(const LearnGlobalResult& r);

// FNV-1a over raw file bytes; input fingerprints for run manifests.
std::uint64_t hash_file(const std::string& path);

struct RunInfo {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // role, path
    std::uint64_t seed = 0;
    nlohmann::json options;
    std::vector<std::pair<std::string, double>> timings;  // phase, seconds
};

// Tool version, options, hashed inputs, and wall times. Timings live only
// here; the report files reference the manifest by path and carry none, so
// reruns with identical inputs leave the reports byte-identical.
nlohmann::json run_manifest(const RunInfo& info);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace resfit
