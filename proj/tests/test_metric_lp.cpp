#include <cmath>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "resfit/lambdacc.hpp"
#include "resfit/metric_lp.hpp"

using namespace resfit;

TEST_CASE("pair cost vector encodes edges and non-edges") {
    Graph k3 = fixtures::complete(3);
    PairCostVector pc = pair_costs(k3, 0.4, WeightMode::Standard);
    CHECK(pc.n == 3);
    REQUIRE(pc.pairs() == 3);
    CHECK(pc.constant == doctest::Approx(0.0));
    for (double v : pc.c) CHECK(v == doctest::Approx(0.6));

    Graph p3 = fixtures::path(3);
    PairCostVector pp = pair_costs(p3, 0.25, WeightMode::Standard);
    // one non-edge pair contributes the constant and a negative coefficient
    CHECK(pp.constant == doctest::Approx(0.25));
    double neg = 0, pos = 0;
    for (double v : pp.c) (v < 0 ? neg : pos) += v;
    CHECK(neg == doctest::Approx(-0.25));
    CHECK(pos == doctest::Approx(1.5));

    CHECK(PairCostVector::pair_index(4, 0, 1) == 0);
    CHECK(PairCostVector::pair_index(4, 0, 3) == 2);
    CHECK(PairCostVector::pair_index(4, 2, 3) == 5);
}

TEST_CASE("three-node path has relaxation value min(lambda, 1 - lambda)") {
    Graph p3 = fixtures::path(3);
    for (double lam : {0.25, 0.5, 0.75}) {
        double want = std::min(lam, 1.0 - lam);
        CHECK(exact_metric_lp(p3, lam, WeightMode::Standard) ==
              doctest::Approx(want).epsilon(1e-9));
        MetricLpResult r = solve_metric_lp(p3, lam, WeightMode::Standard);
        CHECK(r.converged);
        CHECK(r.lower <= want + 1e-9);
        CHECK(r.upper >= want - 1e-9);
        CHECK(r.upper - r.lower <= 1e-5);
    }
}

TEST_CASE("complete graphs relax to zero") {
    CHECK(exact_metric_lp(fixtures::complete(3), 0.3, WeightMode::Standard) ==
          doctest::Approx(0.0));
    MetricLpResult r = solve_metric_lp(fixtures::complete(5), 0.2, WeightMode::Standard);
    CHECK(r.converged);
    CHECK(r.upper == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("relaxation brackets the exact value and stays below integral optima") {
    for (auto& fx : fixtures::small_suite_up_to(8)) {
        for (WeightMode mode : {WeightMode::Standard, WeightMode::DegreeWeighted}) {
            Validity v = validity_interval(fx.g, mode);
            for (double frac : {0.15, 0.6}) {
                double lam = frac * v.hi;
                if (!v.contains(lam)) continue;
                double ex = exact_metric_lp(fx.g, lam, mode);
                MetricLpResult r = solve_metric_lp(fx.g, lam, mode);
                CHECK(r.converged);
                CHECK(r.lower <= ex + 1e-9);
                CHECK(r.upper >= ex - 1e-9);
                CHECK(std::abs(r.lower - ex) <= 1e-5 * (1.0 + std::abs(ex)));
                BruteForceResult ilp = brute_force_opt(fx.g, lam, mode);
                CHECK(r.lower <= ilp.value);
            }
        }
    }
}

TEST_CASE("a crippled projection ladder is rescued by the cut finisher") {
    Graph g = fixtures::random_connected(8, 0.4, 11);
    MetricLpOptions opt;
    opt.max_stages = 1;
    opt.max_sweeps = 4;
    opt.polish_passes = 0;
    double lam = 0.45;
    double ex = exact_metric_lp(g, lam, WeightMode::Standard);
    MetricLpResult r = solve_metric_lp(g, lam, WeightMode::Standard, opt);
    CHECK(r.converged);
    CHECK(std::abs(r.lower - ex) <= 1e-5 * (1.0 + std::abs(ex)));
    CHECK(r.lower <= ex + 1e-9);
}

TEST_CASE("grid samples are concave and reusable from the cache") {
    Graph g = fixtures::random_connected(8, 0.4, 11);
    Validity v = validity_interval(g, WeightMode::DegreeWeighted);
    std::vector<double> lambdas;
    for (int i = 0; i < 15; ++i)
        lambdas.push_back(v.hi / 100.0 + (0.9 * v.hi - v.hi / 100.0) * i / 14.0);

    auto dir = std::filesystem::temp_directory_path() / "resfit_test_cache";
    std::filesystem::remove_all(dir);
    MetricLpOptions opt;

    auto first = sample_g_grid(g, WeightMode::DegreeWeighted, lambdas, opt, dir.string(), 1);
    REQUIRE(first.size() == lambdas.size());
    for (std::size_t i = 1; i + 1 < first.size(); ++i)
        CHECK(first[i].lower >= 0.5 * (first[i - 1].lower + first[i + 1].lower) - 1e-6);

    // a rerun must reproduce the cached values bit for bit
    auto second = sample_g_grid(g, WeightMode::DegreeWeighted, lambdas, opt, dir.string(), 1);
    // and a parallel fill must match the serial one exactly
    auto parallel = sample_g_grid(g, WeightMode::DegreeWeighted, lambdas, opt, "", 4);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].lower == first[i].lower);
        CHECK(second[i].upper == first[i].upper);
        CHECK(parallel[i].lower == first[i].lower);
    }
    CHECK(std::filesystem::exists(dir));
    std::filesystem::remove_all(dir);
}

TEST_CASE("oversized graphs are refused") {
    MetricLpOptions opt;
    opt.node_cap = 8;
    Graph g = fixtures::random_connected(9, 0.3, 5);
    CHECK_THROWS_AS(solve_metric_lp(g, 0.2, WeightMode::Standard, opt), std::invalid_argument);
}
