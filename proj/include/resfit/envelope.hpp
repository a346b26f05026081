#pragma once

#include <cstdint>
#include <vector>

namespace resfit {

// y = intercept + slope * x with integer coefficients.
struct Line {
    std::int64_t intercept = 0;
    std::int64_t slope = 0;
};

// Pointwise minimum of a set of lines: concave and piecewise linear. Pieces
// are ordered left to right, so slopes strictly decrease.
class Envelope {
public:
    static Envelope lower_of_lines(std::vector<Line> lines);

    double eval(double x) const;
    // x-coordinates where the active piece changes (ascending).
    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<Line>& pieces() const { return pieces_; }

private:
    std::vector<Line> pieces_;   // slopes descending
    std::vector<double> breaks_; // size pieces_.size() - 1
};

}  // namespace resfit
