#pragma once

#include <vector>

namespace resfit {

struct LpResult {
    double value = 0;
    std::vector<double> x;
    // Row multipliers read off the final reduced-cost row. At a clean
    // optimum they are the duals; after heavy degenerate pivoting they may
    // carry roundoff, so callers needing a certified bound should clamp them
    // nonnegative and re-evaluate the Lagrangian from the original data.
    std::vector<double> y;
    int pivots = 0;
};

// Minimizes c.x subject to A x <= b and x >= 0, where every entry of b is
// nonnegative (so x = 0 is a feasible start and no phase 1 is needed). Dense
// tableau simplex with Bland's rule, which cannot cycle; intended for small
// exact reference solves, not for large instances. Upper bounds on variables
// are expressed by the caller as extra rows. Throws if the problem is
// unbounded or b has a negative entry.
LpResult solve_lp_min(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b,
                      const std::vector<double>& c);

// Minimizes c.x subject to A x <= b and 0 <= x <= u, with every entry of b
// nonnegative and every entry of u positive and finite. Upper bounds are
// handled by nonbasic status flips instead of extra rows, so the tableau has
// only as many rows as A; that is what makes a cutting-plane master with many
// box-bounded variables affordable. Entering variables follow Dantzig's rule
// until progress stalls on degenerate pivots, then switch to Bland's rule,
// which cannot cycle.
LpResult solve_lp_min_boxed(const std::vector<std::vector<double>>& a,
                            const std::vector<double>& b,
                            const std::vector<double>& c,
                            const std::vector<double>& u);

}  // namespace resfit
