#include <cmath>
#include <vector>

#include "doctest.h"
#include "resfit/prng.hpp"
#include "resfit/simplex.hpp"

using namespace resfit;

TEST_CASE("plain LP minimization on frozen instances") {
    // min -x - y  s.t. x + y <= 1
    LpResult r1 = solve_lp_min({{1, 1}}, {1}, {-1, -1});
    CHECK(r1.value == doctest::Approx(-1.0));

    // min -2x - 3y  s.t. x <= 2, y <= 3, x + y <= 4
    LpResult r2 = solve_lp_min({{1, 0}, {0, 1}, {1, 1}}, {2, 3, 4}, {-2, -3});
    CHECK(r2.value == doctest::Approx(-11.0));  // x = 1, y = 3
    CHECK(r2.x[0] == doctest::Approx(1.0));
    CHECK(r2.x[1] == doctest::Approx(3.0));

    // nonnegative costs: the origin is optimal
    LpResult r3 = solve_lp_min({{1, 2}}, {5}, {1, 2});
    CHECK(r3.value == doctest::Approx(0.0));
}

TEST_CASE("plain LP duality holds on random instances") {
    Rng rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        int m = 1 + (int)rng.next_below(6);
        int n = 1 + (int)rng.next_below(6);
        std::vector<std::vector<double>> a(m, std::vector<double>(n));
        std::vector<double> b(m), c(n);
        for (auto& row : a)
            for (auto& v : row) v = rng.next_unit() * 2 - 0.5;
        for (auto& v : b) v = rng.next_unit() * 3;           // feasible at the origin
        for (auto& v : c) v = rng.next_unit() * 4 - 2;
        // keep the region bounded so the minimum exists
        a.push_back(std::vector<double>(n, 1.0));
        b.push_back(10.0);
        LpResult r = solve_lp_min(a, b, c);
        // primal feasibility
        for (std::size_t i = 0; i < a.size(); ++i) {
            double lhs = 0;
            for (int j = 0; j < n; ++j) lhs += a[i][j] * r.x[j];
            CHECK(lhs <= b[i] + 1e-7);
        }
        for (int j = 0; j < n; ++j) CHECK(r.x[j] >= -1e-9);
        // dual feasibility and zero duality gap
        REQUIRE((int)r.y.size() == (int)a.size());
        double by = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(r.y[i] >= -1e-7);
            by += b[i] * r.y[i];
        }
        for (int j = 0; j < n; ++j) {
            double red = c[j];
            for (std::size_t i = 0; i < a.size(); ++i) red += a[i][j] * r.y[i];
            CHECK(red >= -1e-7);
        }
        CHECK(r.value == doctest::Approx(-by).epsilon(1e-6));
    }
}

TEST_CASE("boxed LP honors upper bounds") {
    // min -sum x  s.t. sum x <= 10, x <= 1 elementwise: the box binds
    int n = 5;
    std::vector<std::vector<double>> a = {std::vector<double>(n, 1.0)};
    std::vector<double> b = {10.0};
    std::vector<double> c(n, -1.0), u(n, 1.0);
    LpResult r = solve_lp_min_boxed(a, b, c, u);
    CHECK(r.value == doctest::Approx(-5.0));
    for (double v : r.x) CHECK(v == doctest::Approx(1.0));

    // the row binds instead once the box is generous
    LpResult r2 = solve_lp_min_boxed(a, b, c, std::vector<double>(n, 100.0));
    CHECK(r2.value == doctest::Approx(-10.0));
}

TEST_CASE("boxed LP equals the plain solver with explicit bound rows") {
    Rng rng(4242);
    for (int rep = 0; rep < 60; ++rep) {
        int m = 1 + (int)rng.next_below(5);
        int n = 1 + (int)rng.next_below(5);
        std::vector<std::vector<double>> a(m, std::vector<double>(n));
        std::vector<double> b(m), c(n), u(n);
        for (auto& row : a)
            for (auto& v : row) v = rng.next_unit() * 2 - 1;
        for (auto& v : b) v = rng.next_unit() * 2;
        for (auto& v : c) v = rng.next_unit() * 4 - 2;
        for (auto& v : u) v = 0.2 + rng.next_unit() * 2;

        LpResult boxed = solve_lp_min_boxed(a, b, c, u);

        auto rows = a;
        auto rhs = b;
        for (int j = 0; j < n; ++j) {
            std::vector<double> e(n, 0.0);
            e[j] = 1.0;
            rows.push_back(e);
            rhs.push_back(u[j]);
        }
        LpResult plain = solve_lp_min(rows, rhs, c);

        CHECK(boxed.value == doctest::Approx(plain.value).epsilon(1e-7));
        for (int j = 0; j < n; ++j) {
            CHECK(boxed.x[j] >= -1e-9);
            CHECK(boxed.x[j] <= u[j] + 1e-9);
        }
        for (int i = 0; i < m; ++i) {
            double lhs = 0;
            for (int j = 0; j < n; ++j) lhs += a[i][j] * boxed.x[j];
            CHECK(lhs <= b[i] + 1e-7);
        }
    }
}
