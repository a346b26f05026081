#include "resfit/envelope.hpp"

#include <algorithm>
#include <stdexcept>

namespace resfit {

Envelope Envelope::lower_of_lines(std::vector<Line> lines) {
    if (lines.empty()) throw std::invalid_argument("no lines");
    // slope descending; for slope ties only the smallest intercept can matter
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope > b.slope;
        return a.intercept < b.intercept;
    });
    std::vector<Line> hull;
    for (const Line& l : lines) {
        if (!hull.empty() && hull.back().slope == l.slope) continue;
        // a flatter line that is nowhere below the current top makes it moot
        while (!hull.empty() && hull.back().intercept >= l.intercept) hull.pop_back();
        while (hull.size() >= 2) {
            const Line& a = hull[hull.size() - 2];
            const Line& b = hull[hull.size() - 1];
            const Line& c = l;
            // cross(a, c) at x = (c.i - a.i)/(a.s - c.s); b is redundant iff
            // b(x) >= c(x), i.e. (b.i - c.i)(a.s - c.s) >= (c.s - b.s)(c.i - a.i)
            __int128 lhs = static_cast<__int128>(b.intercept - c.intercept) *
                           (a.slope - c.slope);
            __int128 rhs = static_cast<__int128>(c.slope - b.slope) *
                           (c.intercept - a.intercept);
            if (lhs >= rhs) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(l);
    }
    Envelope e;
    e.pieces_ = std::move(hull);
    for (std::size_t i = 0; i + 1 < e.pieces_.size(); ++i) {
        const Line& a = e.pieces_[i];
        const Line& b = e.pieces_[i + 1];
        e.breaks_.push_back(static_cast<double>(b.intercept - a.intercept) /
                            static_cast<double>(a.slope - b.slope));
    }
    return e;
}

double Envelope::eval(double x) const {
    std::size_t lo = 0, hi = breaks_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (x <= breaks_[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    const Line& l = pieces_[lo];
    return static_cast<double>(l.intercept) + static_cast<double>(l.slope) * x;
}

}  // namespace resfit
