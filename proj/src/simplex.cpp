#include "resfit/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace resfit {

LpResult solve_lp_min(const std::vector<std::vector<double>>& a,
                      const std::vector<double>& b,
                      const std::vector<double>& c) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m) {
        throw std::invalid_argument("row count mismatch");
    }
    for (double bi : b) {
        if (bi < 0) {
            throw std::invalid_argument(
                "negative right-hand side; x = 0 must be feasible");
        }
    }

    const double tol = 1e-9;
    const int cols = n + m;  // structural variables then slacks

    // tab[i]: constraint row i over all columns plus rhs at index cols.
    std::vector<std::vector<double>> tab(m, std::vector<double>(cols + 1, 0.0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != n) {
            throw std::invalid_argument("column count mismatch");
        }
        for (int j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1.0;
        tab[i][cols] = b[i];
    }
    // reduced-cost row (minimization: pivot until none is negative)
    std::vector<double> red(cols + 1, 0.0);
    for (int j = 0; j < n; ++j) red[j] = c[j];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    LpResult res;
    const int max_pivots = 50000 + 200 * (m + n);
    while (true) {
        // Bland: entering column is the lowest index with negative reduced cost
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (red[j] < -tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        // ratio test; Bland tie-break by smallest basic variable index
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (tab[i][enter] > tol) {
                double ratio = tab[i][cols] / tab[i][enter];
                if (ratio < best_ratio - tol ||
                    (ratio < best_ratio + tol &&
                     (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) throw std::runtime_error("linear program is unbounded");

        double piv = tab[leave][enter];
        for (int j = 0; j <= cols; ++j) tab[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = tab[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        double fr = red[enter];
        if (fr != 0.0) {
            for (int j = 0; j <= cols; ++j) red[j] -= fr * tab[leave][j];
        }
        basis[leave] = enter;

        if (++res.pivots > max_pivots) {
            throw std::runtime_error("simplex failed to terminate");
        }
    }

    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) res.x[basis[i]] = tab[i][cols];
    }
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    res.y.assign(m, 0.0);
    for (int i = 0; i < m; ++i) res.y[i] = red[n + i];
    return res;
}

LpResult solve_lp_min_boxed(const std::vector<std::vector<double>>& a,
                            const std::vector<double>& b,
                            const std::vector<double>& c,
                            const std::vector<double>& u) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m || static_cast<int>(u.size()) != n) {
        throw std::invalid_argument("dimension mismatch");
    }
    for (double bi : b) {
        if (bi < 0) {
            throw std::invalid_argument(
                "negative right-hand side; x = 0 must be feasible");
        }
    }
    for (double uj : u) {
        if (!(uj > 0) || !std::isfinite(uj)) {
            throw std::invalid_argument("upper bounds must be positive finite");
        }
    }

    const double tol = 1e-9;
    const double inf = std::numeric_limits<double>::infinity();
    const int cols = n + m;  // structural variables then slacks

    std::vector<std::vector<double>> tab(m, std::vector<double>(cols, 0.0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != n) {
            throw std::invalid_argument("column count mismatch");
        }
        for (int j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1.0;
    }
    std::vector<double> red(cols, 0.0);
    for (int j = 0; j < n; ++j) red[j] = c[j];

    // Basic values are kept outside the tableau because nonbasic variables
    // sitting at their upper bound shift the right-hand side.
    std::vector<double> beta(b);
    std::vector<int> basis(m);
    enum Status : unsigned char { kLower, kUpper, kBasic };
    std::vector<Status> status(cols, kLower);
    for (int i = 0; i < m; ++i) {
        basis[i] = n + i;
        status[n + i] = kBasic;
    }
    auto upper_of = [&](int j) { return j < n ? u[j] : inf; };

    LpResult res;
    const int max_pivots = 50000 + 200 * (m + n);
    // Dantzig's rule is far faster in practice but can cycle on degenerate
    // bases, so a long run of pivots without objective progress switches the
    // iteration to Bland's rule, which terminates from any basis.
    const int stall_limit = 2 * (m + n) + 64;
    int stalled = 0;
    bool bland = false;
    while (true) {
        int enter = -1;
        double dir = 0;
        if (bland) {
            for (int j = 0; j < cols; ++j) {
                if (status[j] == kLower && red[j] < -tol) {
                    enter = j;
                    dir = 1.0;
                    break;
                }
                if (status[j] == kUpper && red[j] > tol) {
                    enter = j;
                    dir = -1.0;
                    break;
                }
            }
        } else {
            double best = tol;
            for (int j = 0; j < cols; ++j) {
                double score = 0;
                if (status[j] == kLower) {
                    score = -red[j];
                } else if (status[j] == kUpper) {
                    score = red[j];
                } else {
                    continue;
                }
                if (score > best) {
                    best = score;
                    enter = j;
                    dir = (status[j] == kLower) ? 1.0 : -1.0;
                }
            }
        }
        if (enter < 0) break;

        // Moving the entering variable by t in direction dir changes basic
        // value i by -dir * t * tab[i][enter]. The step is limited by the
        // first basic variable to hit either of its bounds, or by the
        // entering variable reaching its own opposite bound. Near-tied rows
        // are broken by the largest pivot magnitude, which keeps the tableau
        // from degrading over long degenerate runs; in the anti-cycling
        // phase the smallest basic index takes over, as the finiteness
        // argument needs it.
        double best_t = upper_of(enter);
        double best_rate = 0;
        int leave = -1;       // -1 means a bound flip of the entering variable
        int leave_to = kLower;
        for (int i = 0; i < m; ++i) {
            double rate = dir * tab[i][enter];
            double t;
            int target;
            if (rate > tol) {
                t = beta[i] / rate;
                target = kLower;
            } else if (rate < -tol) {
                double cap = upper_of(basis[i]);
                if (cap == inf) continue;
                t = (cap - beta[i]) / (-rate);
                target = kUpper;
            } else {
                continue;
            }
            bool better;
            if (t < best_t - tol) {
                better = true;
            } else if (t < best_t + tol) {
                better = leave < 0 ||
                         (bland ? basis[i] < basis[leave]
                                : std::abs(rate) > best_rate);
            } else {
                better = false;
            }
            if (better) {
                best_t = std::max(t, 0.0);
                best_rate = std::abs(rate);
                leave = i;
                leave_to = target;
            }
        }
        if (leave < 0 && !std::isfinite(best_t)) {
            throw std::runtime_error("linear program is unbounded");
        }
        if (!bland) {
            if (best_t > tol) {
                stalled = 0;
            } else if (++stalled > stall_limit) {
                bland = true;
            }
        }

        if (leave < 0) {
            // Bound flip: the entering variable crosses its whole range and
            // the basis is unchanged.
            for (int i = 0; i < m; ++i) {
                beta[i] -= dir * best_t * tab[i][enter];
            }
            status[enter] = (status[enter] == kLower) ? kUpper : kLower;
        } else {
            double enter_val =
                (status[enter] == kUpper ? upper_of(enter) : 0.0) +
                dir * best_t;
            for (int i = 0; i < m; ++i) {
                if (i != leave) beta[i] -= dir * best_t * tab[i][enter];
            }
            beta[leave] = enter_val;

            double piv = tab[leave][enter];
            for (int j = 0; j < cols; ++j) tab[leave][j] /= piv;
            for (int i = 0; i < m; ++i) {
                if (i == leave) continue;
                double f = tab[i][enter];
                if (f == 0.0) continue;
                for (int j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
            }
            double fr = red[enter];
            if (fr != 0.0) {
                for (int j = 0; j < cols; ++j) red[j] -= fr * tab[leave][j];
            }
            status[basis[leave]] =
                (leave_to == kUpper) ? kUpper : kLower;
            basis[leave] = enter;
            status[enter] = kBasic;
        }

        if (++res.pivots > max_pivots) {
            throw std::runtime_error("simplex failed to terminate");
        }
    }

    res.x.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        if (status[j] == kUpper) res.x[j] = u[j];
    }
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) res.x[basis[i]] = beta[i];
    }
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    res.y.assign(m, 0.0);
    for (int i = 0; i < m; ++i) res.y[i] = red[n + i];
    return res;
}

}  // namespace resfit
