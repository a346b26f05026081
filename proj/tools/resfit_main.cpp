// Command line front end. Every subcommand that writes files puts them in one
// output directory together with a manifest.json recording the tool version,
// options, input hashes, and wall times; the data files reference the manifest
// and carry no timings, so reruns with identical inputs reproduce them byte
// for byte.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resfit/community.hpp"
#include "resfit/graph.hpp"
#include "resfit/lambdacc.hpp"
#include "resfit/local.hpp"
#include "resfit/pipeline.hpp"
#include "resfit/synth.hpp"

namespace {

using nlohmann::json;
using namespace resfit;

constexpr const char* kManifestName = "manifest.json";

class StopWatch {
public:
    StopWatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

std::string join_out(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
}

std::string hex17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Leading comment ties the data file to its manifest; all loaders treat '#'
// as a comment, so the files stay round-trippable.
void open_tsv(std::ofstream& out, const std::string& path) {
    out.open(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# manifest: " << kManifestName << "\n";
}

void write_query_tsv(const std::string& path, const std::vector<FitnessQuery>& qs) {
    std::ofstream out;
    open_tsv(out, path);
    out << "beta\tf\tg\tp\n";
    for (const FitnessQuery& q : qs) {
        out << hex17(q.beta) << '\t' << hex17(q.f) << '\t' << hex17(q.g) << '\t'
            << hex17(q.p) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

Graph load_graph_checked(const std::string& path, LoadStats* stats = nullptr) {
    auto [g, st] = load_edge_list_file(path);
    if (stats) *stats = st;
    if (g.n() == 0) throw std::runtime_error("graph is empty: " + path);
    return std::move(g);
}

int count_components(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    int comps = 0;
    for (NodeId start = 0; start < g.n(); ++start) {
        if (seen[start]) continue;
        ++comps;
        std::queue<NodeId> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
            }
        }
    }
    return comps;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

// Shared flag bundle for the two learn commands.
struct FitFlags {
    double tol = 1e-4;
    double tau_eq = 1e-9;
    int grid = 0;
    int jobs = 1;
    std::uint64_t seed = 0;
    std::string out = ".";

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "stop once the bracket is narrower than this")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tau-eq", tau_eq,
                        "relative tolerance for treating two ratio values as equal");
        cmd->add_option("--grid", grid,
                        "also sample the ratio on a uniform grid of this many points");
        cmd->add_option("--jobs", jobs, "threads for grid sampling")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "seed for any randomized choice");
        cmd->add_option("--out", out, "output directory");
    }

    json snapshot() const {
        return {{"tol", tol}, {"tau_eq", tau_eq}, {"grid", grid}, {"jobs", jobs}};
    }
};

void fill_learn_options(const FitFlags& ff, LearnOptions& opt) {
    opt.tol = ff.tol;
    opt.tau_eq = ff.tau_eq;
    opt.grid_points = ff.grid;
    opt.jobs = ff.jobs;
}

void emit_fit_outputs(const std::string& out_dir, const RunInfo& info, json report,
                      const LearnOutcome& fit) {
    ensure_out_dir(out_dir);
    write_json_file(join_out(out_dir, kManifestName), run_manifest(info));
    report["manifest"] = kManifestName;
    report["queries_tsv"] = "queries.tsv";
    if (fit.grid_used) report["curve_tsv"] = "curve.tsv";
    write_json_file(join_out(out_dir, "report.json"), report);
    write_query_tsv(join_out(out_dir, "queries.tsv"), fit.queries);
    if (fit.grid_used) write_query_tsv(join_out(out_dir, "curve.tsv"), fit.grid.curve);
}

// learn-local ------------------------------------------------------------

struct LearnLocalArgs {
    std::string graph_path;
    std::string seeds_path;
    std::string ref_path;
    double grow_factor = 5.0;
    std::string epsilon = "inf";
    FitFlags ff;
};

int run_learn_local(const LearnLocalArgs& a) {
    StopWatch total;
    Graph g = load_graph_checked(a.graph_path);
    NodeSet x = load_node_set_file(a.seeds_path, g);
    if (x.empty()) throw std::runtime_error("seed set is empty");

    NodeSet r;
    if (!a.ref_path.empty()) {
        r = load_node_set_file(a.ref_path, g);
    } else {
        auto target = static_cast<std::size_t>(
            std::llround(std::ceil(a.grow_factor * static_cast<double>(x.size()))));
        r = bfs_grow(g, x, std::max(target, x.size()));
    }

    double eps;
    if (a.epsilon == "inf") {
        eps = std::numeric_limits<double>::infinity();
    } else if (a.epsilon == "flowimprove") {
        std::int64_t vol_r = vol(g, r);
        std::int64_t vol_rest = g.total_volume() - vol_r;
        if (vol_rest <= 0) {
            throw std::runtime_error(
                "flowimprove preset needs the complement of R to have volume");
        }
        eps = static_cast<double>(vol_r) / static_cast<double>(vol_rest);
    } else {
        std::size_t pos = 0;
        eps = std::stod(a.epsilon, &pos);
        if (pos != a.epsilon.size() || !(eps >= 0)) {
            throw std::runtime_error("--epsilon expects inf, flowimprove, or a "
                                     "nonnegative number");
        }
    }

    LearnOptions opt;
    fill_learn_options(a.ff, opt);
    opt.eps = eps;

    StopWatch fit_watch;
    LearnLocalResult res = learn_local(g, r, x, opt);
    double fit_seconds = fit_watch.seconds();

    RunInfo info;
    info.command = "learn-local";
    info.inputs.emplace_back("graph", a.graph_path);
    info.inputs.emplace_back("seeds", a.seeds_path);
    if (!a.ref_path.empty()) info.inputs.emplace_back("ref", a.ref_path);
    info.seed = a.ff.seed;
    info.options = a.ff.snapshot();
    info.options["epsilon"] = a.epsilon;
    info.options["epsilon_value"] =
        std::isinf(eps) ? json("inf") : json(eps);
    info.options["grow_factor"] = a.grow_factor;
    info.timings.emplace_back("fit", fit_seconds);
    info.timings.emplace_back("total", total.seconds());

    json report = learn_local_report(g, res);
    report["command"] = "learn-local";
    report["epsilon"] = std::isinf(eps) ? json("inf") : json(eps);
    report["reference_size"] = r.size();
    report["reference_volume"] = vol(g, r);
    emit_fit_outputs(a.ff.out, info, std::move(report), res.fit);

    std::printf("alpha_x %.12g  delta %.12g  |S_X| %zu  (%s)\n",
                res.fit.bisect.beta_star, res.fit.bisect.delta,
                res.best_set_max.size(), a.ff.out.c_str());
    return 0;
}

// learn-global -----------------------------------------------------------

struct LearnGlobalArgs {
    std::string graph_path;
    std::string clusters_path;
    std::string mode = "degree";
    std::string range;
    std::string cache_dir;
    double lp_tol_abs = 1e-6;
    double lp_tol_rel = 1e-6;
    int lp_max_sweeps = 2000;
    int lp_max_stages = 8;
    int lp_cap = 400;
    FitFlags ff;
};

int run_learn_global(const LearnGlobalArgs& a) {
    StopWatch total;
    Graph g = load_graph_checked(a.graph_path);
    Clustering example = load_clustering_file(a.clusters_path, g);

    LearnOptions opt;
    fill_learn_options(a.ff, opt);
    opt.mode = parse_weight_mode(a.mode);
    opt.cache_dir = a.cache_dir;
    opt.lp.tol_abs = a.lp_tol_abs;
    opt.lp.tol_rel = a.lp_tol_rel;
    opt.lp.max_sweeps = a.lp_max_sweeps;
    opt.lp.max_stages = a.lp_max_stages;
    opt.lp.node_cap = a.lp_cap;
    if (!a.range.empty()) {
        double lo = 0, hi = 0;
        if (std::sscanf(a.range.c_str(), "%lf:%lf", &lo, &hi) != 2) {
            throw std::runtime_error("--range expects LO:HI");
        }
        opt.range_lo = lo;
        opt.range_hi = hi;
    }

    StopWatch fit_watch;
    LearnGlobalResult res = learn_global(g, example, opt);
    double fit_seconds = fit_watch.seconds();

    RunInfo info;
    info.command = "learn-global";
    info.inputs.emplace_back("graph", a.graph_path);
    info.inputs.emplace_back("example-clusters", a.clusters_path);
    info.seed = a.ff.seed;
    info.options = a.ff.snapshot();
    info.options["mode"] = a.mode;
    info.options["range"] = a.range.empty() ? json(nullptr) : json(a.range);
    info.options["cache_dir"] = a.cache_dir;
    info.options["lp"] = {{"tol_abs", a.lp_tol_abs},
                          {"tol_rel", a.lp_tol_rel},
                          {"max_sweeps", a.lp_max_sweeps},
                          {"max_stages", a.lp_max_stages},
                          {"node_cap", a.lp_cap}};
    info.timings.emplace_back("fit", fit_seconds);
    info.timings.emplace_back("total", total.seconds());

    json report = learn_global_report(res);
    report["command"] = "learn-global";
    report["lambda_star"] = res.fit.bisect.beta_star;
    report["delta"] = res.fit.bisect.delta;
    emit_fit_outputs(a.ff.out, info, std::move(report), res.fit);

    std::printf("lambda_star %.12g  delta %.12g  (%s)\n", res.fit.bisect.beta_star,
                res.fit.bisect.delta, a.ff.out.c_str());
    return 0;
}

// cluster ----------------------------------------------------------------

struct ClusterArgs {
    std::string graph_path;
    double lambda = 0;
    int restarts = 1;
    std::uint64_t seed = 0;
    std::string out = ".";
};

int run_cluster(const ClusterArgs& a) {
    StopWatch total;
    Graph g = load_graph_checked(a.graph_path);
    if (!(a.lambda > 0)) throw std::runtime_error("--lambda must be positive");

    StopWatch solve_watch;
    LouvainResult lr = louvain_best(g, a.lambda, a.seed, a.restarts);
    double solve_seconds = solve_watch.seconds();

    RunInfo info;
    info.command = "cluster";
    info.inputs.emplace_back("graph", a.graph_path);
    info.seed = a.seed;
    info.options = {{"lambda", a.lambda}, {"restarts", a.restarts}};
    info.timings.emplace_back("solve", solve_seconds);
    info.timings.emplace_back("total", total.seconds());

    ensure_out_dir(a.out);
    write_json_file(join_out(a.out, kManifestName), run_manifest(info));

    json report;
    report["command"] = "cluster";
    report["manifest"] = kManifestName;
    report["clusters_tsv"] = "clusters.tsv";
    report["lambda"] = a.lambda;
    report["restarts"] = a.restarts;
    report["num_clusters"] = lr.clustering.k;
    report["objective_h"] = lr.objective_h;
    report["levels"] = lr.levels;
    report["objective_degree_weighted"] =
        eval_cc_objective(g, lr.clustering, a.lambda, WeightMode::DegreeWeighted);
    report["modularity"] = modularity(g, lr.clustering);
    Validity val = validity_interval(g, WeightMode::DegreeWeighted);
    report["inside_validity"] = val.contains(a.lambda);
    write_json_file(join_out(a.out, "report.json"), report);

    std::ofstream out;
    open_tsv(out, join_out(a.out, "clusters.tsv"));
    save_clustering(lr.clustering, g, out);
    if (!out) throw std::runtime_error("failed writing clusters.tsv");

    std::printf("clusters %d  H %.12g  (%s)\n", lr.clustering.k, lr.objective_h,
                a.out.c_str());
    return 0;
}

// eval -------------------------------------------------------------------

struct EvalArgs {
    std::string graph_path;
    std::string clusters_path;
    std::string ref_path;
    std::string set_path;
    std::string against_path;
    std::string mode = "degree";
    double lambda = 0;
    std::string out;
};

json conductance_json(const Graph& g, const NodeSet& s) {
    Rational phi = conductance(g, s);
    return {{"num", phi.num}, {"den", phi.den}, {"value", phi.value()}};
}

int run_eval(const EvalArgs& a) {
    Graph g = load_graph_checked(a.graph_path);
    json report;
    report["command"] = "eval";

    if (!a.clusters_path.empty()) {
        Clustering c = load_clustering_file(a.clusters_path, g);
        json jc;
        jc["num_clusters"] = c.k;
        jc["modularity"] = modularity(g, c);
        jc["modularity_key"] = modularity_key(g, c);
        jc["objective_key"] = cc_objective_key(g, c);
        if (a.lambda > 0) {
            jc["lambda"] = a.lambda;
            jc["objective"] =
                eval_cc_objective(g, c, a.lambda, parse_weight_mode(a.mode));
        }
        report["clusters"] = jc;
        if (!a.ref_path.empty()) {
            Clustering ref = load_clustering_file(a.ref_path, g);
            report["vs_ref"] = {{"ari", ari(c, ref)},
                                {"nmi", nmi(c, ref)},
                                {"identical", same_partition(c, ref)}};
        }
    }
    if (!a.set_path.empty()) {
        NodeSet s = load_node_set_file(a.set_path, g);
        json js;
        js["size"] = s.size();
        js["volume"] = vol(g, s);
        js["cut"] = cut(g, s);
        js["conductance"] = conductance_json(g, s);
        if (!a.against_path.empty()) {
            NodeSet x = load_node_set_file(a.against_path, g);
            js["f1_vs_against"] = f1_set(s, x);
            js["against_conductance"] = conductance_json(g, x);
        }
        report["set"] = js;
    }
    if (!report.contains("clusters") && !report.contains("set")) {
        throw std::runtime_error("eval needs --clusters and/or --set");
    }

    if (!a.out.empty()) {
        RunInfo info;
        info.command = "eval";
        info.inputs.emplace_back("graph", a.graph_path);
        if (!a.clusters_path.empty()) info.inputs.emplace_back("clusters", a.clusters_path);
        if (!a.ref_path.empty()) info.inputs.emplace_back("ref", a.ref_path);
        if (!a.set_path.empty()) info.inputs.emplace_back("set", a.set_path);
        if (!a.against_path.empty()) info.inputs.emplace_back("against", a.against_path);
        info.options = {{"lambda", a.lambda}, {"mode", a.mode}};
        ensure_out_dir(a.out);
        write_json_file(join_out(a.out, kManifestName), run_manifest(info));
        report["manifest"] = kManifestName;
        write_json_file(join_out(a.out, "report.json"), report);
    }
    std::cout << report.dump(1) << "\n";
    return 0;
}

// gen --------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int cliques = 0;
    int clique_size = 0;
    int groups = 0;
    int group_size = 0;
    double p_in = 0;
    double p_out = 0;
    std::uint64_t seed = 0;
    std::string out = ".";
};

int run_gen(const GenArgs& a) {
    SynthResult sr;
    json params;
    if (a.family == "ring") {
        sr = ring_of_cliques(a.cliques, a.clique_size);
        params = {{"cliques", a.cliques}, {"clique_size", a.clique_size}};
    } else if (a.family == "planted") {
        sr = planted_partition(a.groups, a.group_size, a.p_in, a.p_out, a.seed);
        params = {{"groups", a.groups},
                  {"group_size", a.group_size},
                  {"p_in", a.p_in},
                  {"p_out", a.p_out}};
    } else {
        throw std::runtime_error("--family must be ring or planted");
    }

    RunInfo info;
    info.command = "gen";
    info.seed = a.seed;
    info.options = params;
    info.options["family"] = a.family;

    ensure_out_dir(a.out);
    write_json_file(join_out(a.out, kManifestName), run_manifest(info));

    {
        std::ofstream out;
        open_tsv(out, join_out(a.out, "graph.tsv"));
        save_edge_list(sr.graph, out);
        if (!out) throw std::runtime_error("failed writing graph.tsv");
    }
    {
        std::ofstream out;
        open_tsv(out, join_out(a.out, "planted.tsv"));
        save_clustering(sr.planted, sr.graph, out);
        if (!out) throw std::runtime_error("failed writing planted.tsv");
    }

    json report;
    report["command"] = "gen";
    report["manifest"] = kManifestName;
    report["family"] = a.family;
    report["params"] = params;
    report["n"] = sr.graph.n();
    report["m"] = sr.graph.m();
    report["planted_clusters"] = sr.planted.k;
    report["graph_hash"] = hash_hex(sr.graph.hash());
    report["graph_tsv"] = "graph.tsv";
    report["planted_tsv"] = "planted.tsv";
    write_json_file(join_out(a.out, "report.json"), report);

    std::printf("n %d  m %lld  clusters %d  (%s)\n", sr.graph.n(),
                static_cast<long long>(sr.graph.m()), sr.planted.k, a.out.c_str());
    return 0;
}

// stats / prep -----------------------------------------------------------

int run_stats(const std::string& graph_path, const std::string& out_dir) {
    LoadStats st;
    Graph g = load_graph_checked(graph_path, &st);
    std::int32_t dmin = g.degree(0), dmax = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        dmin = std::min(dmin, g.degree(u));
        dmax = std::max(dmax, g.degree(u));
    }
    json report;
    report["command"] = "stats";
    report["n"] = g.n();
    report["m"] = g.m();
    report["volume"] = g.total_volume();
    report["min_degree"] = dmin;
    report["max_degree"] = dmax;
    report["mean_degree"] = g.n() ? 2.0 * static_cast<double>(g.m()) / g.n() : 0.0;
    report["components"] = count_components(g);
    report["largest_component"] = largest_component(g).size();
    report["self_loops_dropped"] = st.self_loops_dropped;
    report["duplicate_edges_dropped"] = st.duplicate_edges_dropped;
    report["hash"] = hash_hex(g.hash());
    if (!out_dir.empty()) {
        RunInfo info;
        info.command = "stats";
        info.inputs.emplace_back("graph", graph_path);
        info.options = json::object();
        ensure_out_dir(out_dir);
        write_json_file(join_out(out_dir, kManifestName), run_manifest(info));
        report["manifest"] = kManifestName;
        write_json_file(join_out(out_dir, "report.json"), report);
    }
    std::cout << report.dump(1) << "\n";
    return 0;
}

int run_prep(const std::string& graph_path, const std::string& out_dir) {
    LoadStats st;
    Graph g = load_graph_checked(graph_path, &st);
    NodeSet comp = largest_component(g);
    Graph sub = induced_subgraph(g, comp);

    RunInfo info;
    info.command = "prep";
    info.inputs.emplace_back("graph", graph_path);
    info.options = json::object();

    ensure_out_dir(out_dir);
    write_json_file(join_out(out_dir, kManifestName), run_manifest(info));
    {
        std::ofstream out;
        open_tsv(out, join_out(out_dir, "graph.tsv"));
        save_edge_list(sub, out);
        if (!out) throw std::runtime_error("failed writing graph.tsv");
    }
    json report;
    report["command"] = "prep";
    report["manifest"] = kManifestName;
    report["graph_tsv"] = "graph.tsv";
    report["n_before"] = g.n();
    report["m_before"] = g.m();
    report["n_after"] = sub.n();
    report["m_after"] = sub.m();
    report["self_loops_dropped"] = st.self_loops_dropped;
    report["duplicate_edges_dropped"] = st.duplicate_edges_dropped;
    write_json_file(join_out(out_dir, "report.json"), report);

    std::printf("kept %d of %d nodes, %lld of %lld edges  (%s)\n", sub.n(), g.n(),
                static_cast<long long>(sub.m()), static_cast<long long>(g.m()),
                out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolution parameter fitting for graph clustering"};
    app.require_subcommand(1);

    LearnLocalArgs ll;
    CLI::App* c_ll = app.add_subcommand(
        "learn-local", "fit the penalty alpha for a candidate cluster");
    c_ll->add_option("--graph", ll.graph_path, "edge list file")->required();
    c_ll->add_option("--seeds", ll.seeds_path, "candidate cluster X, one id per line")
        ->required();
    c_ll->add_option("--ref", ll.ref_path,
                     "reference set R; grown from X by BFS when omitted");
    c_ll->add_option("--grow-factor", ll.grow_factor,
                     "grow R to this multiple of |X| when --ref is omitted")
        ->check(CLI::Range(1.0, 1e9));
    c_ll->add_option("--epsilon", ll.epsilon,
                     "outside-R volume penalty: inf, flowimprove, or a number");
    ll.ff.attach(c_ll);

    LearnGlobalArgs lg;
    CLI::App* c_lg = app.add_subcommand(
        "learn-global", "fit the resolution for an example clustering");
    c_lg->add_option("--graph", lg.graph_path, "edge list file")->required();
    c_lg->add_option("--example-clusters", lg.clusters_path,
                     "example clustering, node<TAB>label lines")
        ->required();
    c_lg->add_option("--mode", lg.mode, "pair weighting: standard or degree")
        ->check(CLI::IsMember({"standard", "degree"}));
    c_lg->add_option("--range", lg.range, "resolution interval LO:HI");
    c_lg->add_option("--cache-dir", lg.cache_dir,
                     "directory for cached relaxation samples");
    c_lg->add_option("--lp-tol-abs", lg.lp_tol_abs, "relaxation gap: absolute");
    c_lg->add_option("--lp-tol-rel", lg.lp_tol_rel, "relaxation gap: relative");
    c_lg->add_option("--lp-max-sweeps", lg.lp_max_sweeps, "projection sweeps per stage");
    c_lg->add_option("--lp-max-stages", lg.lp_max_stages, "regularization stages");
    c_lg->add_option("--lp-cap", lg.lp_cap,
                     "refuse graphs with more nodes than this (the relaxation "
                     "holds all node pairs in memory)");
    lg.ff.attach(c_lg);

    ClusterArgs cl;
    CLI::App* c_cl = app.add_subcommand("cluster",
                                        "greedy clustering at a fixed resolution");
    c_cl->add_option("--graph", cl.graph_path, "edge list file")->required();
    c_cl->add_option("--lambda", cl.lambda, "resolution")->required();
    c_cl->add_option("--restarts", cl.restarts, "seeded restarts, best kept")
        ->check(CLI::PositiveNumber);
    c_cl->add_option("--seed", cl.seed, "base seed for node visit order");
    c_cl->add_option("--out", cl.out, "output directory");

    EvalArgs ev;
    CLI::App* c_ev = app.add_subcommand("eval", "score clusterings or node sets");
    c_ev->add_option("--graph", ev.graph_path, "edge list file")->required();
    c_ev->add_option("--clusters", ev.clusters_path, "clustering to score");
    c_ev->add_option("--ref", ev.ref_path, "reference clustering for ARI/NMI");
    c_ev->add_option("--set", ev.set_path, "node set to score");
    c_ev->add_option("--against", ev.against_path, "node set compared via F1");
    c_ev->add_option("--lambda", ev.lambda, "resolution for the pairwise objective");
    c_ev->add_option("--mode", ev.mode, "pair weighting: standard or degree")
        ->check(CLI::IsMember({"standard", "degree"}));
    c_ev->add_option("--out", ev.out, "optional output directory");

    GenArgs gn;
    CLI::App* c_gn = app.add_subcommand("gen", "write a synthetic benchmark graph");
    c_gn->add_option("--family", gn.family, "ring or planted")->required();
    c_gn->add_option("--cliques", gn.cliques, "ring: number of cliques");
    c_gn->add_option("--clique-size", gn.clique_size, "ring: nodes per clique");
    c_gn->add_option("--groups", gn.groups, "planted: number of groups");
    c_gn->add_option("--group-size", gn.group_size, "planted: nodes per group");
    c_gn->add_option("--p-in", gn.p_in, "planted: intra-group edge probability");
    c_gn->add_option("--p-out", gn.p_out, "planted: cross-group edge probability");
    c_gn->add_option("--seed", gn.seed, "planted: edge sampling seed");
    c_gn->add_option("--out", gn.out, "output directory");

    std::string stats_graph, stats_out;
    CLI::App* c_st = app.add_subcommand("stats", "basic graph statistics as JSON");
    c_st->add_option("--graph", stats_graph, "edge list file")->required();
    c_st->add_option("--out", stats_out, "optional output directory");

    std::string prep_graph, prep_out = ".";
    CLI::App* c_pr = app.add_subcommand("prep",
                                        "extract the largest connected component");
    c_pr->add_option("--graph", prep_graph, "edge list file")->required();
    c_pr->add_option("--out", prep_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_ll->parsed()) return run_learn_local(ll);
        if (c_lg->parsed()) return run_learn_global(lg);
        if (c_cl->parsed()) return run_cluster(cl);
        if (c_ev->parsed()) return run_eval(ev);
        if (c_gn->parsed()) return run_gen(gn);
        if (c_st->parsed()) return run_stats(stats_graph, stats_out);
        if (c_pr->parsed()) return run_prep(prep_graph, prep_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
