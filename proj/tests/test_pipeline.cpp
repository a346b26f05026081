#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "doctest.h"
#include "fixtures.hpp"
#include "resfit/pipeline.hpp"
#include "resfit/synth.hpp"

using namespace resfit;

static const double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("learn_local reproduces the barbell closed forms") {
    Graph g = fixtures::barbell();
    LearnOptions opt;
    opt.tol = 1e-8;

    // fitting the reference triangle itself: the ratio is 1 on the whole range
    LearnLocalResult full = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1, 2}), opt);
    CHECK(full.alpha_star == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    CHECK(full.alpha_star_set.ids == std::vector<NodeId>{0, 1, 2});
    CHECK(full.fit.bisect.delta == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(full.fit.range_lo == doctest::Approx(1.0 / 7.0));
    CHECK(full.fit.range_hi == doctest::Approx(1.0));
    CHECK(full.phi_x == doctest::Approx(1.0 / 7.0));
    CHECK(full.best_set_min.ids == std::vector<NodeId>{0, 1, 2});
    CHECK(full.fit.audit_ratio_ok);
    CHECK(full.fit.audit_shape_ok);

    // the two-node candidate: increasing ratio, so the left endpoint wins
    LearnLocalResult two = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1}), opt);
    CHECK(std::abs(two.fit.bisect.beta_star - 1.0 / 7.0) <= 1e-6);
    CHECK(two.fit.bisect.delta == doctest::Approx(17.0 / 7.0).epsilon(1e-6));
    CHECK(two.f_const == doctest::Approx(2.0));
    CHECK(two.f_slope == doctest::Approx(3.0));
}

TEST_CASE("learn_local with a grid pass matches the plain run") {
    Graph g = fixtures::barbell();
    LearnOptions opt;
    opt.tol = 1e-8;
    LearnLocalResult plain = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1}), opt);

    LearnOptions with_grid = opt;
    with_grid.grid_points = 17;
    with_grid.jobs = 4;
    LearnLocalResult gridded = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1}),
                                           with_grid);
    CHECK(gridded.fit.grid_used);
    CHECK(gridded.fit.grid.curve.size() == 17);
    CHECK(gridded.fit.bisect.delta ==
          doctest::Approx(plain.fit.bisect.delta).epsilon(1e-9));
}

TEST_CASE("learn_global on the small clique ring stops on the ratio-one plateau") {
    SynthResult syn = ring_of_cliques(4, 3);
    LearnOptions opt;
    opt.mode = WeightMode::Standard;
    LearnGlobalResult r = learn_global(syn.graph, syn.planted, opt);
    CHECK(r.fit.bisect.delta == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.fit.bisect.reason == StopReason::EqualityPlateau);
    CHECK(r.fit.audit_ratio_ok);
    CHECK(r.fit.audit_shape_ok);
    CHECK(r.profile.a == 4);  // the four ring edges are cut
    // default range: a safe fraction of the validity interval
    CHECK(r.fit.range_lo == doctest::Approx(0.01));
    CHECK(r.fit.range_hi == doctest::Approx(0.9));

    LearnOptions deg = opt;
    deg.mode = WeightMode::DegreeWeighted;
    LearnGlobalResult rd = learn_global(syn.graph, syn.planted, deg);
    CHECK(rd.fit.bisect.delta == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("learn_global warns when the numerator degenerates") {
    Graph g = fixtures::barbell();
    LearnOptions opt;
    opt.mode = WeightMode::DegreeWeighted;
    // {1,2,3,4} | {5,6}: cut weight equals intra-non-edge weight, so b = 0
    LearnGlobalResult r = learn_global(g, Clustering::from_labels({0, 0, 0, 0, 1, 1}), opt);
    nlohmann::json rep = learn_global_report(r);
    bool constant_warning = false;
    for (auto& w : rep["warnings"])
        if (w.get<std::string>().find("constant") != std::string::npos) constant_warning = true;
    CHECK(constant_warning);

    // a single cluster cuts nothing: a = 0
    Graph s = fixtures::star(5);
    LearnGlobalResult r2 =
        learn_global(s, Clustering::from_labels({0, 0, 0, 0, 0, 0}), LearnOptions{});
    nlohmann::json rep2 = learn_global_report(r2);
    bool no_cut_warning = false;
    for (auto& w : rep2["warnings"])
        if (w.get<std::string>().find("cuts no edges") != std::string::npos)
            no_cut_warning = true;
    CHECK(no_cut_warning);
}

TEST_CASE("learn_global rejects an explicit range outside validity") {
    SynthResult syn = ring_of_cliques(4, 3);
    LearnOptions opt;
    opt.mode = WeightMode::Standard;
    opt.range_lo = 0.5;
    opt.range_hi = 1.5;
    CHECK_THROWS_AS(learn_global(syn.graph, syn.planted, opt), std::invalid_argument);
}

TEST_CASE("reports carry the expected fields and serialize deterministically") {
    Graph g = fixtures::barbell();
    LearnOptions opt;
    opt.tol = 1e-8;
    LearnLocalResult r = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1, 2}), opt);
    nlohmann::json rep = learn_local_report(g, r);
    for (const char* key :
         {"alpha_star", "alpha_star_set", "alpha_x", "delta", "phi_x", "s_x", "x",
          "numerator", "fit", "f1_s_x_vs_x", "best_set_min", "best_set_max"})
        CHECK(rep.contains(key));
    CHECK(rep["s_x"] == nlohmann::json({1, 2, 3}));  // original ids
    CHECK(rep["f1_s_x_vs_x"] == doctest::Approx(1.0));
    for (const char* key : {"beta_star", "delta", "range", "evaluations", "recursive_calls",
                            "new_g_evals", "anomalies", "stop_reason", "audits"})
        CHECK(rep["fit"].contains(key));

    LearnLocalResult again = learn_local(g, NodeSet::of({0, 1, 2}), NodeSet::of({0, 1, 2}), opt);
    CHECK(learn_local_report(g, again).dump() == rep.dump());
}

TEST_CASE("file hashing and manifests") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "resfit_test_manifest";
    fs::create_directories(dir);
    fs::path f = dir / "probe.txt";
    {
        std::ofstream out(f, std::ios::binary);
        out << "abc";
    }
    CHECK(hash_file(f.string()) == 0xe71fa2190541574bULL);

    RunInfo info;
    info.command = "probe";
    info.inputs = {{"graph", f.string()}};
    info.seed = 7;
    info.options = {{"tol", 1e-4}};
    info.timings = {{"total", 0.25}};
    nlohmann::json m = run_manifest(info);
    CHECK(m["command"] == "probe");
    CHECK(m["tool"] == "resfit");
    CHECK(m["version"] == kVersion);
    REQUIRE(m["inputs"].size() == 1);
    CHECK(m["inputs"][0]["role"] == "graph");
    CHECK(m["inputs"][0]["fnv1a"] == "e71fa2190541574b");
    CHECK(m["timings_seconds"]["total"] == doctest::Approx(0.25));

    fs::path mf = dir / "manifest.json";
    write_json_file(mf.string(), m);
    std::ifstream in(mf);
    nlohmann::json back = nlohmann::json::parse(in);
    CHECK(back == m);
    fs::remove_all(dir);
}
