#pragma once

#include <span>
#include <vector>

namespace lusin {

// Ordinary least-squares line fit.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0; // coefficient of determination, in [0,1]
    int n_points = 0;
};

// Fits ys ~ slope*xs + intercept. Requires >= 2 points with non-identical
// xs; constant ys give slope 0 and r_squared 1.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

} // namespace lusin
