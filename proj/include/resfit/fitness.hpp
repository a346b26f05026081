#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace resfit {

struct FitnessQuery {
    double beta = 0;
    double f = 0;
    double g = 0;
    double p = 0;  // f / g
};

enum class StopReason { IntervalTolerance, EqualityPlateau };

// Ratio P(beta) = F(beta)/G(beta) on [lo, hi] where F is linear on declared
// segments and G is a concave piecewise-linear lower bound with F >= G > 0.
// Evaluations are cached by exact beta so repeated queries are bit-identical,
// and every query is logged in evaluation order.
class FitnessFunction {
public:
    FitnessFunction(std::function<double(double)> f_eval, std::function<double(double)> g_eval,
                    double lo, double hi, double tau_eq = 1e-9);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double tau_eq() const { return tau_eq_; }

    // interior breakpoints of F, ascending; minimize_fitness works per segment
    void set_f_breakpoints(std::vector<double> bps) { f_breaks_ = std::move(bps); }
    const std::vector<double>& f_breakpoints() const { return f_breaks_; }

    // whether G may be evaluated from several threads at once
    void set_parallel_safe(bool v) { parallel_safe_ = v; }
    bool parallel_safe() const { return parallel_safe_; }

    FitnessQuery query(double beta) const;
    bool cached(double beta) const { return cache_.count(beta) > 0; }

    // uncached, unlogged evaluations for concurrent grid fills; adopt() merges
    // a result into the cache afterwards (serial)
    double f_eval_raw(double beta) const { return f_eval_(beta); }
    double g_eval_raw(double beta) const { return g_eval_(beta); }
    void adopt(const FitnessQuery& q) const;

    // equality with tolerance tau_eq relative to max(1, values)
    bool eq(double pa, double pb) const;

    const std::vector<FitnessQuery>& log() const { return log_; }
    std::int64_t g_evals() const { return g_evals_; }
    void clear_log() { log_.clear(); }

private:
    std::function<double(double)> f_eval_;
    std::function<double(double)> g_eval_;
    double lo_, hi_, tau_eq_;
    std::vector<double> f_breaks_;
    bool parallel_safe_ = false;
    mutable std::map<double, FitnessQuery> cache_;
    mutable std::vector<FitnessQuery> log_;
    mutable std::int64_t g_evals_ = 0;
};

struct BisectState {
    std::int64_t recursive_calls = 0;  // interval-halving recursions only
    std::int64_t anomalies = 0;        // configurations a valid P cannot produce
    StopReason reason = StopReason::IntervalTolerance;
};

// Interval search for the minimizer of P given that the minimum lies in
// [lo, hi]. Equal-within-tau values at two probes bracket the minimum, which
// justifies the equality cases. Width below tol stops the recursion.
double check_one_branch(const FitnessFunction& f, double lo, double hi, double tol,
                        BisectState& st);
// Variant for a bracket lo < mid < hi with P(mid) < min(P(lo), P(hi)).
double check_two_branches(const FitnessFunction& f, double lo, double mid, double hi,
                          double tol, BisectState& st);

struct BisectionResult {
    double beta_star = 0;
    double delta = 0;  // P(beta_star)
    std::int64_t recursive_calls = 0;  // max over F-segments
    std::int64_t new_g_evals = 0;
    std::int64_t anomalies = 0;
    StopReason reason = StopReason::IntervalTolerance;
};

BisectionResult minimize_fitness(const FitnessFunction& f, double tol);

struct GridResult {
    std::vector<FitnessQuery> curve;  // ascending beta, endpoints included
    std::size_t argmin = 0;           // smallest beta on ties
};

// The exact abscissas grid_minimize uses (endpoints included). Shared so
// precomputed G samples can be adopted at bit-identical positions.
std::vector<double> uniform_grid(double lo, double hi, int points);

// Uniform sampling of P. jobs > 1 evaluates concurrently when the function is
// parallel-safe; results and log order do not depend on the thread count.
GridResult grid_minimize(const FitnessFunction& f, int points, int jobs = 1);

// P >= 1 - tau at every query (the example clustering can never beat the
// relaxation bound).
bool audit_p_at_least_one(const std::vector<FitnessQuery>& qs, double tau,
                          std::string* msg = nullptr);
// Sorted by beta, no query may exceed both neighbors by more than 2*tau:
// a strict interior maximum is impossible for a valid F/G pair.
bool audit_no_interior_maximum(std::vector<FitnessQuery> qs, double tau,
                               std::string* msg = nullptr);

}  // namespace resfit
