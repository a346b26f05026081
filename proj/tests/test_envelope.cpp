#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "resfit/envelope.hpp"
#include "resfit/prng.hpp"

using namespace resfit;

TEST_CASE("lower envelope drops dominated lines and orders pieces by slope") {
    // min(x, 3, 6 - 2x): the constant line is dominated, pieces cross at x = 2
    Envelope e = Envelope::lower_of_lines({{3, 0}, {0, 1}, {6, -2}});
    REQUIRE(e.pieces().size() == 2);
    CHECK(e.pieces()[0].slope == 1);
    CHECK(e.pieces()[1].slope == -2);
    REQUIRE(e.breakpoints().size() == 1);
    CHECK(e.breakpoints()[0] == doctest::Approx(2.0));
    CHECK(e.eval(0.0) == doctest::Approx(0.0));
    CHECK(e.eval(2.0) == doctest::Approx(2.0));
    CHECK(e.eval(3.0) == doctest::Approx(0.0));
    CHECK(e.eval(-1.0) == doctest::Approx(-1.0));
}

TEST_CASE("parallel lines keep only the lowest") {
    Envelope e = Envelope::lower_of_lines({{2, 1}, {1, 1}, {5, 1}});
    REQUIRE(e.pieces().size() == 1);
    CHECK(e.pieces()[0].intercept == 1);
    CHECK(e.pieces()[0].slope == 1);
    CHECK(e.breakpoints().empty());
}

TEST_CASE("envelope equals the pointwise minimum and is concave") {
    Rng rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Line> lines;
        int k = 2 + (int)rng.next_below(8);
        for (int i = 0; i < k; ++i)
            lines.push_back({(std::int64_t)rng.next_below(41) - 20,
                             (std::int64_t)rng.next_below(21) - 10});
        Envelope e = Envelope::lower_of_lines(lines);
        for (std::size_t i = 1; i < e.pieces().size(); ++i)
            CHECK(e.pieces()[i].slope < e.pieces()[i - 1].slope);
        for (int s = 0; s <= 40; ++s) {
            double x = -2.0 + 0.1 * s;
            double direct = 1e300;
            for (auto& l : lines)
                direct = std::min(direct, (double)l.intercept + (double)l.slope * x);
            CHECK(e.eval(x) == doctest::Approx(direct).epsilon(1e-12));
        }
        // midpoint concavity on a few random triples
        for (int t = 0; t < 10; ++t) {
            double a = -2.0 + 4.0 * rng.next_unit();
            double b = -2.0 + 4.0 * rng.next_unit();
            double mid = 0.5 * (a + b);
            CHECK(e.eval(mid) >= 0.5 * (e.eval(a) + e.eval(b)) - 1e-9);
        }
    }
}
