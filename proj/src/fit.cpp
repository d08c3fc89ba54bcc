#include "lusin/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lusin {

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n)
        throw std::invalid_argument("fit_line: needs >= 2 paired points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    // centered sums for stability
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_line: all xs identical");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.n_points = static_cast<int>(n);
    if (syy == 0.0) {
        fit.r_squared = 1.0; // constant data, fitted exactly
    } else {
        const double r2 = (sxy * sxy) / (sxx * syy);
        fit.r_squared = std::clamp(r2, 0.0, 1.0);
    }
    return fit;
}

} // namespace lusin
