#include "resfit/local.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace resfit {

LocalInstance::LocalInstance(const Graph& graph, NodeSet r_, double eps_)
    : g(&graph), r(std::move(r_)), eps(eps_) {
    if (r.empty()) throw std::invalid_argument("reference set is empty");
    if (!(eps >= 0)) throw std::invalid_argument("eps must be >= 0 or +inf");
    in_r = r.flags(graph.n());
    for (NodeId v : r.ids) {
        vol_r += graph.degree(v);
    }
    cut_r = cut(graph, in_r);
    if (std::isinf(eps)) {
        std::int64_t vol_rest = graph.total_volume() - vol_r;
        if (vol_r > vol_rest) {
            throw std::invalid_argument(
                "eps = +inf requires vol(R) <= vol of the complement");
        }
    }
}

double eval_f_alpha(const LocalInstance& inst, const NodeSet& s, double alpha) {
    const Graph& g = *inst.g;
    std::vector<char> in_s = s.flags(g.n());
    std::int64_t vol_r_minus_s = 0;
    std::int64_t vol_s_minus_r = 0;
    for (NodeId v = 0; v < static_cast<NodeId>(g.n()); ++v) {
        if (inst.in_r[v] && !in_s[v]) vol_r_minus_s += g.degree(v);
        if (!inst.in_r[v] && in_s[v]) vol_s_minus_r += g.degree(v);
    }
    if (std::isinf(inst.eps)) {
        if (vol_s_minus_r > 0) return std::numeric_limits<double>::infinity();
        return static_cast<double>(cut(g, in_s)) +
               alpha * static_cast<double>(vol_r_minus_s);
    }
    return static_cast<double>(cut(g, in_s)) +
           alpha * static_cast<double>(vol_r_minus_s) +
           alpha * inst.eps * static_cast<double>(vol_s_minus_r);
}

LocalMinCut min_f_alpha(const LocalInstance& inst, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    LocalNetwork net = build_local_network(*inst.g, inst.r, alpha, inst.eps);
    CutResult cr = net.net.max_flow_min_cut(net.s, net.t);
    LocalMinCut out;
    out.value = cr.value;
    std::vector<NodeId> ids_min;
    std::vector<NodeId> ids_max;
    for (std::size_t i = 0; i < net.node_of.size(); ++i) {
        if (cr.in_source_side[i]) ids_min.push_back(net.node_of[i]);
        if (cr.in_source_side_max[i]) ids_max.push_back(net.node_of[i]);
    }
    out.set_min = NodeSet::of(std::move(ids_min));
    out.set_max = NodeSet::of(std::move(ids_max));
    return out;
}

double local_conductance(const LocalInstance& inst, const NodeSet& s) {
    const Graph& g = *inst.g;
    std::vector<char> in_s = s.flags(g.n());
    std::int64_t vol_in = 0;
    std::int64_t vol_out = 0;
    for (NodeId v : s.ids) {
        if (inst.in_r[v]) {
            vol_in += g.degree(v);
        } else {
            vol_out += g.degree(v);
        }
    }
    double denom = static_cast<double>(vol_in);
    if (vol_out > 0) {
        if (std::isinf(inst.eps)) {
            throw std::invalid_argument(
                "set leaves R but eps = +inf confines candidates to R");
        }
        denom -= inst.eps * static_cast<double>(vol_out);
    }
    if (!(denom > 0)) {
        throw std::invalid_argument(
            "localized conductance needs vol(R&S) > eps*vol(S\\R)");
    }
    return static_cast<double>(cut(g, in_s)) / denom;
}

LocalConductanceResult solve_min_local_conductance(const LocalInstance& inst) {
    LocalConductanceResult res;
    res.best = inst.r;
    res.alpha_star =
        static_cast<double>(inst.cut_r) / static_cast<double>(inst.vol_r);
    // A boundary-less reference set already has conductance 0 and cannot be
    // improved, so no flow rounds are needed.
    if (inst.cut_r == 0) return res;
    const double rel = 1e-9;
    const int max_rounds = 10000;
    for (int round = 0; round < max_rounds; ++round) {
        ++res.iterations;
        LocalMinCut mc = min_f_alpha(inst, res.alpha_star);
        double floor_value = res.alpha_star * static_cast<double>(inst.vol_r);
        if (mc.value >= floor_value * (1.0 - rel) - 1e-15) {
            // No candidate set beats alpha: f's minimum sits on the empty /
            // whole-R level, so alpha is the minimum localized conductance.
            return res;
        }
        if (mc.set_min.empty()) return res;
        res.best = mc.set_min;
        res.alpha_star = local_conductance(inst, res.best);
    }
    throw std::runtime_error("conductance improvement loop failed to settle");
}

LocalFitness make_local_fitness(const std::shared_ptr<LocalInstance>& inst,
                                NodeSet x) {
    if (!inst) throw std::invalid_argument("null instance");
    if (x.empty()) throw std::invalid_argument("candidate cluster is empty");
    const Graph& g = *inst->g;
    std::vector<char> in_x = x.flags(g.n());
    std::int64_t missing = 0;
    std::int64_t vol_r_minus_x = 0;
    std::int64_t vol_x_minus_r = 0;
    for (NodeId v = 0; v < static_cast<NodeId>(g.n()); ++v) {
        if (inst->in_r[v] && !in_x[v]) vol_r_minus_x += g.degree(v);
        if (!inst->in_r[v] && in_x[v]) {
            vol_x_minus_r += g.degree(v);
            ++missing;
        }
    }
    if (std::isinf(inst->eps) && missing > 0) {
        throw std::invalid_argument(
            "candidate cluster has " + std::to_string(missing) +
            " node(s) outside R, but eps = +inf confines candidates to R");
    }

    LocalFitness lf;
    lf.inst = inst;
    lf.x = std::move(x);
    lf.f_const = static_cast<double>(cut(g, in_x));
    lf.f_slope = static_cast<double>(vol_r_minus_x);
    if (!std::isinf(inst->eps)) {
        lf.f_slope += inst->eps * static_cast<double>(vol_x_minus_r);
    }

    LocalConductanceResult lc = solve_min_local_conductance(*inst);
    lf.lo = lc.alpha_star;
    lf.alpha_star_set = lc.best;
    lf.hi = static_cast<double>(inst->cut_r);
    if (!(lf.lo > 0)) {
        throw std::invalid_argument(
            "minimum localized conductance is 0; the ratio's denominator "
            "vanishes at the left endpoint");
    }
    if (!(lf.lo < lf.hi)) {
        throw std::invalid_argument(
            "degenerate search range: min conductance >= cut(R)");
    }
    return lf;
}

FitnessQuery query_local_fitness(const LocalFitness& lf, double alpha) {
    FitnessQuery q;
    q.beta = alpha;
    q.f = lf.f_const + alpha * lf.f_slope;
    q.g = min_f_alpha(*lf.inst, alpha).value;
    if (!(q.g > 0)) {
        throw std::runtime_error("lower bound is not positive at this alpha");
    }
    q.p = q.f / q.g;
    return q;
}

FitnessFunction to_fitness_function(const LocalFitness& lf, double tau_eq) {
    auto inst = lf.inst;
    double f_const = lf.f_const;
    double f_slope = lf.f_slope;
    FitnessFunction fn(
        [f_const, f_slope](double a) { return f_const + a * f_slope; },
        [inst](double a) { return min_f_alpha(*inst, a).value; }, lf.lo, lf.hi,
        tau_eq);
    fn.set_parallel_safe(true);
    return fn;
}

}  // namespace resfit
