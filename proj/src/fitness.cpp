#include "resfit/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resfit {

FitnessFunction::FitnessFunction(std::function<double(double)> f_eval,
                                 std::function<double(double)> g_eval, double lo, double hi,
                                 double tau_eq)
    : f_eval_(std::move(f_eval)),
      g_eval_(std::move(g_eval)),
      lo_(lo),
      hi_(hi),
      tau_eq_(tau_eq) {
    if (!(lo_ < hi_)) throw std::invalid_argument("fitness range is empty");
    if (tau_eq_ <= 0) throw std::invalid_argument("tau_eq must be positive");
}

FitnessQuery FitnessFunction::query(double beta) const {
    auto it = cache_.find(beta);
    if (it != cache_.end()) {
        log_.push_back(it->second);
        return it->second;
    }
    double fv = f_eval_(beta);
    double gv = g_eval_(beta);
    ++g_evals_;
    if (!(gv > 0)) {
        throw std::runtime_error("lower bound G(" + std::to_string(beta) +
                                 ") = " + std::to_string(gv) + " is not positive");
    }
    if (fv < gv - tau_eq_ * std::max(1.0, std::abs(fv))) {
        throw std::runtime_error("lower bound exceeds objective at beta = " +
                                 std::to_string(beta) + ": F = " + std::to_string(fv) +
                                 " < G = " + std::to_string(gv));
    }
    FitnessQuery q{beta, fv, gv, fv / gv};
    cache_.emplace(beta, q);
    log_.push_back(q);
    return q;
}

void FitnessFunction::adopt(const FitnessQuery& q) const {
    if (cache_.count(q.beta)) return;
    if (!(q.g > 0)) {
        throw std::runtime_error("lower bound G(" + std::to_string(q.beta) +
                                 ") = " + std::to_string(q.g) + " is not positive");
    }
    if (q.f < q.g - tau_eq_ * std::max(1.0, std::abs(q.f))) {
        throw std::runtime_error("lower bound exceeds objective at beta = " +
                                 std::to_string(q.beta));
    }
    ++g_evals_;
    cache_.emplace(q.beta, q);
}

bool FitnessFunction::eq(double pa, double pb) const {
    return std::abs(pa - pb) <= tau_eq_ * std::max(1.0, std::max(pa, pb));
}

double check_one_branch(const FitnessFunction& f, double lo, double hi, double tol,
                        BisectState& st) {
    if (hi - lo < tol) {
        st.reason = StopReason::IntervalTolerance;
        return lo;
    }
    double mid = 0.5 * (lo + hi);
    double pl = f.query(lo).p;
    double pm = f.query(mid).p;
    double pr = f.query(hi).p;
    bool el = f.eq(pl, pm);
    bool er = f.eq(pm, pr);

    if (el && er) {
        // flat within tolerance; a valid P is constant only at its minimum
        st.reason = StopReason::EqualityPlateau;
        return mid;
    }
    if (el) {  // P(lo) = P(mid), P(mid) != P(hi)
        if (pm < pr) {
            ++st.recursive_calls;
            return check_one_branch(f, lo, mid, tol, st);
        }
        // P(lo) = P(mid) > P(hi): exact equality here is impossible for a
        // valid P (plateaus only happen at the minimum), so the left pair is
        // a near-tie on a descending stretch; the minimum is right of mid
        ++st.recursive_calls;
        return check_one_branch(f, mid, hi, tol, st);
    }
    if (er) {  // P(mid) = P(hi), P(lo) != P(mid)
        if (pl > pm) {
            ++st.recursive_calls;
            return check_one_branch(f, mid, hi, tol, st);
        }
        // P(lo) < P(mid) = P(hi): near-tie on an ascending stretch; the
        // minimum is left of mid
        ++st.recursive_calls;
        return check_one_branch(f, lo, mid, tol, st);
    }
    if (pl > pm && pm < pr) {
        // interval kept whole: the dispatch performs no halving and is not a
        // counted recursion step
        return check_two_branches(f, lo, mid, hi, tol, st);
    }
    if (pm < pr) {  // ascending tail: minimum on the left
        ++st.recursive_calls;
        return check_one_branch(f, lo, mid, tol, st);
    }
    if (pl > pm) {  // descending head: minimum on the right
        ++st.recursive_calls;
        return check_one_branch(f, mid, hi, tol, st);
    }
    // P(lo) < P(mid) > P(hi): a strict interior maximum, impossible for a
    // valid pair; fall toward the smaller endpoint
    ++st.anomalies;
    ++st.recursive_calls;
    if (pl <= pr) return check_one_branch(f, lo, mid, tol, st);
    return check_one_branch(f, mid, hi, tol, st);
}

double check_two_branches(const FitnessFunction& f, double lo, double mid, double hi,
                          double tol, BisectState& st) {
    if (hi - lo < tol) {
        st.reason = StopReason::IntervalTolerance;
        return mid;
    }
    double lm = 0.5 * (lo + mid);
    double rm = 0.5 * (mid + hi);
    double plm = f.query(lm).p;
    double pm = f.query(mid).p;
    double prm = f.query(rm).p;
    bool el = f.eq(plm, pm);
    bool er = f.eq(pm, prm);

    if (el && er) {
        st.reason = StopReason::EqualityPlateau;
        return mid;
    }
    if (el) {  // equal pair brackets the minimum in [lm, mid]
        ++st.recursive_calls;
        return check_one_branch(f, lm, mid, tol, st);
    }
    if (er) {
        ++st.recursive_calls;
        return check_one_branch(f, mid, rm, tol, st);
    }
    if (plm < pm && pm < prm) {
        ++st.recursive_calls;
        return check_two_branches(f, lo, lm, mid, tol, st);
    }
    if (plm > pm && pm > prm) {
        ++st.recursive_calls;
        return check_two_branches(f, mid, rm, hi, tol, st);
    }
    if (plm > pm && pm < prm) {
        ++st.recursive_calls;
        return check_two_branches(f, lm, mid, rm, tol, st);
    }
    // P(mid) above both midpoints contradicts the bracket invariant
    ++st.anomalies;
    ++st.recursive_calls;
    if (plm <= prm) return check_two_branches(f, lo, lm, mid, tol, st);
    return check_two_branches(f, mid, rm, hi, tol, st);
}

BisectionResult minimize_fitness(const FitnessFunction& f, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    std::vector<double> bounds{f.lo()};
    for (double b : f.f_breakpoints())
        if (b > f.lo() && b < f.hi()) bounds.push_back(b);
    bounds.push_back(f.hi());

    BisectionResult best;
    bool have = false;
    std::int64_t evals_before = f.g_evals();
    std::int64_t max_calls = 0, anomalies = 0;
    StopReason reason = StopReason::IntervalTolerance;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        BisectState st;
        double beta = check_one_branch(f, bounds[i], bounds[i + 1], tol, st);
        double delta = f.query(beta).p;
        max_calls = std::max(max_calls, st.recursive_calls);
        anomalies += st.anomalies;
        if (!have || delta < best.delta ||
            (delta == best.delta && beta < best.beta_star)) {
            best.beta_star = beta;
            best.delta = delta;
            reason = st.reason;
            have = true;
        }
    }
    best.recursive_calls = max_calls;
    best.new_g_evals = f.g_evals() - evals_before;
    best.anomalies = anomalies;
    best.reason = reason;
    return best;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> betas(points);
    for (int i = 0; i < points; ++i)
        betas[i] = lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(points - 1);
    return betas;
}

GridResult grid_minimize(const FitnessFunction& f, int points, int jobs) {
    std::vector<double> betas = uniform_grid(f.lo(), f.hi(), points);

    GridResult res;
    res.curve.resize(points);

    bool parallel = jobs != 1 && f.parallel_safe();
#ifdef _OPENMP
    if (parallel) {
        // evaluate uncached points concurrently, then log in index order so
        // the result is independent of scheduling
        std::vector<int> todo;
        for (int i = 0; i < points; ++i)
            if (!f.cached(betas[i])) todo.push_back(i);
        std::vector<FitnessQuery> fresh(todo.size());
        std::int64_t count = static_cast<std::int64_t>(todo.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
        for (std::int64_t j = 0; j < count; ++j) {
            double b = betas[todo[j]];
            FitnessQuery q;
            q.beta = b;
            q.f = f.f_eval_raw(b);
            q.g = f.g_eval_raw(b);
            q.p = q.f / q.g;
            fresh[j] = q;
        }
        for (std::int64_t j = 0; j < count; ++j) f.adopt(fresh[j]);
    }
#endif
    for (int i = 0; i < points; ++i) {
        res.curve[i] = f.query(betas[i]);
        if (res.curve[i].p < res.curve[res.argmin].p) res.argmin = i;
    }
    return res;
}

bool audit_p_at_least_one(const std::vector<FitnessQuery>& qs, double tau, std::string* msg) {
    for (const auto& q : qs) {
        if (q.p < 1.0 - tau) {
            if (msg) {
                std::ostringstream os;
                os << "P(" << q.beta << ") = " << q.p << " < 1 - " << tau;
                *msg = os.str();
            }
            return false;
        }
    }
    return true;
}

bool audit_no_interior_maximum(std::vector<FitnessQuery> qs, double tau, std::string* msg) {
    std::sort(qs.begin(), qs.end(),
              [](const FitnessQuery& a, const FitnessQuery& b) { return a.beta < b.beta; });
    qs.erase(std::unique(qs.begin(), qs.end(),
                         [](const FitnessQuery& a, const FitnessQuery& b) {
                             return a.beta == b.beta;
                         }),
             qs.end());
    for (std::size_t i = 1; i + 1 < qs.size(); ++i) {
        double allowed = 2 * tau * std::max(1.0, qs[i].p);
        if (qs[i].p > qs[i - 1].p + allowed && qs[i].p > qs[i + 1].p + allowed) {
            if (msg) {
                std::ostringstream os;
                os << "interior maximum at beta = " << qs[i].beta << ": " << qs[i - 1].p
                   << " < " << qs[i].p << " > " << qs[i + 1].p;
                *msg = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace resfit
