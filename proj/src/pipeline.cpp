#include "resfit/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "resfit/community.hpp"

namespace resfit {

namespace {

LearnOutcome run_fit(const FitnessFunction& fn, const LearnOptions& opt) {
    LearnOutcome out;
    out.range_lo = fn.lo();
    out.range_hi = fn.hi();
    if (opt.grid_points > 1) {
        out.grid = grid_minimize(fn, opt.grid_points, opt.jobs);
        out.grid_used = true;
    }
    out.bisect = minimize_fitness(fn, opt.tol);
    out.queries = fn.log();
    std::string m1, m2;
    out.audit_ratio_ok = audit_p_at_least_one(out.queries, fn.tau_eq(), &m1);
    out.audit_shape_ok = audit_no_interior_maximum(out.queries, fn.tau_eq(), &m2);
    out.audit_message = m1;
    if (!m2.empty()) {
        if (!out.audit_message.empty()) out.audit_message += "; ";
        out.audit_message += m2;
    }
    return out;
}

}  // namespace

LearnLocalResult learn_local(const Graph& g, const NodeSet& r, const NodeSet& x,
                             const LearnOptions& opt) {
    auto inst = std::make_shared<LocalInstance>(g, r, opt.eps);
    LocalFitness lf = make_local_fitness(inst, x);
    FitnessFunction fn = to_fitness_function(lf, opt.tau_eq);

    LearnLocalResult res;
    res.alpha_star = lf.lo;
    res.alpha_star_set = lf.alpha_star_set;
    res.f_const = lf.f_const;
    res.f_slope = lf.f_slope;
    res.x = x;
    try {
        res.phi_x = local_conductance(*inst, x);
    } catch (const std::invalid_argument&) {
        res.phi_x = std::numeric_limits<double>::quiet_NaN();
    }
    res.fit = run_fit(fn, opt);

    LocalMinCut mc = min_f_alpha(*inst, res.fit.bisect.beta_star);
    res.best_set_min = mc.set_min;
    res.best_set_max = mc.set_max;
    return res;
}

LearnGlobalResult learn_global(const Graph& g, const Clustering& example,
                               const LearnOptions& opt) {
    LearnGlobalResult res;
    res.profile = mistake_profile(g, example, opt.mode);
    const Validity& val = res.profile.validity;

    double lo = opt.range_lo;
    double hi = opt.range_hi;
    if (lo == 0 && hi == 0) {
        if (opt.mode == WeightMode::DegreeWeighted) {
            // At exactly hi the heaviest edges get weight 0, which can drive
            // the relaxation value to 0 and with it the ratio's denominator.
            // Stay a safe margin inside.
            hi = 0.9 * val.hi;
            lo = val.hi / 100.0;
        } else {
            lo = 0.01;
            hi = 0.99;
        }
    }
    if (!(lo < hi)) throw std::invalid_argument("empty resolution range");
    if (!val.contains(lo) || !val.contains(hi)) {
        throw std::invalid_argument(
            "resolution range must stay inside the interval where all edges "
            "keep nonnegative weight");
    }
    if (res.profile.a == 0 && res.profile.b == 0) {
        throw std::invalid_argument(
            "example clustering makes no mistakes at any resolution; there is "
            "nothing to fit");
    }

    FitnessFunction fn(
        [prof = res.profile](double l) { return prof.eval_linear(l); },
        [gp = &g, mode = opt.mode, lp = opt.lp](double l) {
            return solve_metric_lp(*gp, l, mode, lp).lower;
        },
        lo, hi, opt.tau_eq);
    fn.set_parallel_safe(true);

    if (opt.grid_points > 1) {
        // route the grid through the sample cache, then adopt the results so
        // grid_minimize and the search reuse them instead of re-solving
        std::vector<double> betas = uniform_grid(lo, hi, opt.grid_points);
        std::vector<GSample> samples =
            sample_g_grid(g, opt.mode, betas, opt.lp, opt.cache_dir, opt.jobs);
        for (const GSample& s : samples) {
            FitnessQuery q;
            q.beta = s.lambda;
            q.f = res.profile.eval_linear(s.lambda);
            q.g = s.lower;
            q.p = q.f / q.g;
            fn.adopt(q);
        }
    }

    res.fit = run_fit(fn, opt);
    return res;
}

namespace {

nlohmann::json ids_json(const NodeSet& s, const Graph& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (NodeId v : s.ids) arr.push_back(g.original_id(v));
    return arr;
}

const char* reason_name(StopReason r) {
    return r == StopReason::EqualityPlateau ? "equality_plateau"
                                            : "interval_tolerance";
}

}  // namespace

nlohmann::json to_json(const LearnOutcome& o) {
    nlohmann::json j;
    j["range"] = {o.range_lo, o.range_hi};
    j["beta_star"] = o.bisect.beta_star;
    j["delta"] = o.bisect.delta;
    j["recursive_calls"] = o.bisect.recursive_calls;
    j["new_g_evals"] = o.bisect.new_g_evals;
    j["anomalies"] = o.bisect.anomalies;
    j["stop_reason"] = reason_name(o.bisect.reason);
    j["evaluations"] = o.queries.size();
    j["audits"] = {{"ratio_at_least_one", o.audit_ratio_ok},
                   {"no_interior_maximum", o.audit_shape_ok},
                   {"message", o.audit_message}};
    if (o.grid_used) {
        nlohmann::json curve = nlohmann::json::array();
        for (const FitnessQuery& q : o.grid.curve) {
            curve.push_back({{"beta", q.beta}, {"f", q.f}, {"g", q.g}, {"p", q.p}});
        }
        j["grid"] = {{"curve", curve},
                     {"argmin_beta", o.grid.curve[o.grid.argmin].beta},
                     {"argmin_p", o.grid.curve[o.grid.argmin].p}};
    }
    return j;
}

nlohmann::json learn_local_report(const Graph& g, const LearnLocalResult& r) {
    nlohmann::json j;
    j["alpha_x"] = r.fit.bisect.beta_star;
    j["delta"] = r.fit.bisect.delta;
    // the nonempty minimizer at the learned alpha is the cluster to report;
    // the smallest one can collapse to the empty set exactly at a tie
    j["s_x"] = ids_json(r.best_set_max, g);
    j["f1_s_x_vs_x"] = f1_set(r.best_set_max, r.x);
    if (std::isnan(r.phi_x)) {
        j["phi_x"] = nullptr;
    } else {
        j["phi_x"] = r.phi_x;
    }
    j["x"] = ids_json(r.x, g);
    j["alpha_star"] = r.alpha_star;
    j["alpha_star_set"] = ids_json(r.alpha_star_set, g);
    j["numerator"] = {{"constant", r.f_const}, {"slope", r.f_slope}};
    j["fit"] = to_json(r.fit);
    j["best_set_min"] = ids_json(r.best_set_min, g);
    j["best_set_max"] = ids_json(r.best_set_max, g);
    return j;
}

nlohmann::json learn_global_report(const LearnGlobalResult& r) {
    nlohmann::json j;
    j["mode"] = weight_mode_name(r.profile.mode);
    j["cut_mistakes"] = r.profile.p_x;
    j["intra_nonedge_pairs"] = r.profile.n_x;
    j["numerator"] = {{"constant", r.profile.a}, {"slope", r.profile.b}};
    j["validity"] = {{"lo", r.profile.validity.lo},
                     {"hi", r.profile.validity.hi},
                     {"hi_inclusive", r.profile.validity.hi_inclusive}};
    nlohmann::json warnings = nlohmann::json::array();
    if (r.profile.b == 0) {
        warnings.push_back(
            "numerator is constant in the resolution; every resolution fits "
            "equally well");
    }
    if (r.profile.a == 0) {
        warnings.push_back("example clustering cuts no edges");
    }
    j["warnings"] = warnings;
    j["fit"] = to_json(r.fit);
    return j;
}

std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;
    char buf[1 << 14];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!in) break;
    }
    return h;
}

nlohmann::json run_manifest(const RunInfo& info) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& [role, path] : info.inputs) {
        char hex[24];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(hash_file(path)));
        inputs.push_back({{"role", role}, {"path", path}, {"fnv1a", hex}});
    }
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [phase, seconds] : info.timings) timings[phase] = seconds;
    return {{"tool", "resfit"},
            {"version", kVersion},
            {"command", info.command},
            {"seed", info.seed},
            {"options", info.options},
            {"inputs", inputs},
            {"timings_seconds", timings}};
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace resfit
