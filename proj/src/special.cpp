#include "lusin/special.hpp"

#include <algorithm>
#include <cmath>

namespace lusin {

namespace {

// Euler-Maclaurin tail for sum_{n>N} n^-s, correct through the B2 term:
//   N^(1-s)/(s-1) - (correction: partial sum runs to N inclusive, so the
//   tail is) N^(1-s)/(s-1) - N^(-s)/2 + s*N^(-s-1)/12,
// with remainder bounded by the next term s(s+1)(s+2) N^(-s-3)/720.
double zeta_tail(double s, double n) {
    const double np = std::pow(n, -s);
    return std::pow(n, 1.0 - s) / (s - 1.0) - 0.5 * np + s * np / (12.0 * n);
}

// N such that the post-B2 remainder is below ~1e-16 (zeta >= 1 always).
int zeta_terms(double s) {
    const double c = s * (s + 1.0) * (s + 2.0) / 720.0;
    const double n = std::pow(c * 1e16, 1.0 / (s + 3.0));
    return std::clamp(static_cast<int>(std::ceil(n)), 16, 4000);
}

double sum_pow_desc(double s, int from, int to) {
    // descending order so the small terms accumulate first
    double acc = 0.0;
    for (int n = to; n >= from; --n)
        acc += std::pow(static_cast<double>(n), -s);
    return acc;
}

} // namespace

double zeta(double s) {
    if (!(s > 1.0))
        throw std::domain_error("zeta: requires s > 1");
    const int n = zeta_terms(s);
    return sum_pow_desc(s, 1, n) + zeta_tail(s, n);
}

double zeta_minus_one(double s) {
    if (!(s > 1.0))
        throw std::domain_error("zeta_minus_one: requires s > 1");
    if (s > 1080.0)
        return 0.0; // 2^-s underflows
    const int n = zeta_terms(s);
    return sum_pow_desc(s, 2, n) + zeta_tail(s, n);
}

namespace {

// Crude magnitude estimate used only to turn the relative target into an
// absolute quadrature tolerance.
double gamma_scale(double x) {
    if (x >= 1.0)
        return std::sqrt(2.0 * M_PI / x) * std::pow(x / M_E, x);
    return 1.0 / x;
}

// int_0^S e^-t t^(x-1) dt. For x < 1 the substitution t = u^(1/x) removes
// the endpoint singularity: integrand becomes e^(-u^(1/x))/x on [0, S^x].
double gamma_head(double x, double s, double abs_tol) {
    const QuadSpec spec{abs_tol, 60};
    if (x >= 1.0)
        return integrate([x](double t) { return std::exp(-t) * std::pow(t, x - 1.0); },
                         0.0, s, spec);
    const double inv_x = 1.0 / x;
    return integrate([inv_x](double u) {
               return u == 0.0 ? 1.0 : std::exp(-std::pow(u, inv_x));
           }, 0.0, std::pow(s, x), spec) * inv_x;
}

} // namespace

double gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma: requires x > 0");
    const double split = std::max(1.0, x);
    const double tol = 2e-14 * gamma_scale(x);
    const double head = gamma_head(x, split, tol);
    const double tail = integrate(
        [x](double t) { return std::exp(-t) * std::pow(t, x - 1.0); },
        split, std::numeric_limits<double>::infinity(), QuadSpec{tol, 60});
    return head + tail;
}

double upper_incomplete_gamma(double x, double y) {
    if (!(x > 0.0))
        throw std::domain_error("upper_incomplete_gamma: requires x > 0");
    if (!(y >= 0.0))
        throw std::domain_error("upper_incomplete_gamma: requires y >= 0");
    if (y == 0.0)
        return gamma(x);
    // Gamma(x,y) = e^-y int_0^inf e^-u (u+y)^(x-1) du; factoring e^-y keeps
    // relative accuracy when y is large and the result underflow-small.
    auto integrand = [x, y](double u) { return std::exp(-u) * std::pow(u + y, x - 1.0); };
    const double inf = std::numeric_limits<double>::infinity();
    const double rough = integrate(integrand, 0.0, inf, QuadSpec{1e-6, 60});
    const double tol = 1e-12 * std::max(rough, 1e-280);
    return std::exp(-y) * integrate(integrand, 0.0, inf, QuadSpec{tol, 60});
}

double exp_integral_e1(double x) {
    if (!(x > 0.0))
        throw std::domain_error("exp_integral_e1: requires x > 0");
    const double inf = std::numeric_limits<double>::infinity();
    if (x >= 1.0) {
        // E1(x) = int_x^inf e^-u/u du = e^-x int_0^inf e^-s/(s+x) ds
        auto integrand = [x](double s) { return std::exp(-s) / (s + x); };
        const double tol = 1e-12 / x;
        return std::exp(-x) * integrate(integrand, 0.0, inf, QuadSpec{tol, 60});
    }
    // int_x^1 e^-u/u du with u = x e^v, plus the constant piece E1(1).
    static const double e1_at_one = exp_integral_e1(1.0);
    const double len = std::log(1.0 / x);
    const double head = integrate(
        [x](double v) { return std::exp(-x * std::exp(v)); },
        0.0, len, QuadSpec{1e-13 * std::max(len, 1.0), 60});
    return head + e1_at_one;
}

} // namespace lusin
