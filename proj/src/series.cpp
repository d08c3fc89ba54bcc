#include "lusin/series.hpp"

#include <cmath>

#include "lusin/phase.hpp"

namespace lusin {

namespace {

constexpr std::uint64_t kTermCap = 500'000'000;

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::differentiable: return "differentiable";
    case Regime::critical: return "critical";
    case Regime::rough: return "rough";
    }
    return "?";
}

TruncationBudget truncation_terms(const SeriesParams& params, double abs_tol) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("truncation_terms: abs_tol must be > 0");
    const double am1 = params.alpha - 1.0;
    const double raw = std::pow(am1 * abs_tol, -1.0 / am1);
    // snap against the exact-threshold case before rounding up
    double n = std::ceil(raw * (1.0 - 1e-12));
    if (!(n >= 1.0))
        n = 1.0;
    if (n > 1.8e19)
        throw ConvergenceError("truncation_terms: budget exceeds representable range",
                               n, abs_tol);
    return TruncationBudget{abs_tol, static_cast<std::uint64_t>(n)};
}

double riemann_eval(const SeriesParams& params, double x, double abs_tol) {
    const TruncationBudget budget = truncation_terms(params, abs_tol);
    const std::uint64_t n_terms = budget.n_terms;
    if (n_terms > kTermCap)
        throw ConvergenceError("riemann_eval: term budget exceeds practical cap",
                               0.0, abs_tol);
    if (x == 0.0)
        return 0.0;

    detail::Kahan acc;
    const auto ib = as_integer_exponent(params.beta);
    if (ib) {
        const unsigned b = *ib;
        const double ax = std::fmod(std::abs(x), 2.0);
        const double sign = x < 0.0 ? -1.0 : 1.0;
        for (std::uint64_t n = 1; n <= n_terms; ++n) {
            const double w = power_phase_mod2(n, b, ax);
            acc.add(sign * sinpi(w) * std::pow(static_cast<double>(n), -params.alpha));
        }
    } else {
        for (std::uint64_t n = 1; n <= n_terms; ++n) {
            const double nd = static_cast<double>(n);
            acc.add(sinpi(std::fmod(std::pow(nd, params.beta) * x, 2.0)) *
                    std::pow(nd, -params.alpha));
        }
    }
    return acc.sum;
}

double sin_baseline(double x) {
    return sinpi(std::fmod(x, 2.0));
}

void NonharmonicSpec::validate() const {
    if (!(alpha > 1.0) || !(beta > 0.0) || !(c1 > 0.0) || !(c2 > 0.0) || !(c3 > 0.0))
        throw SpecViolationError("NonharmonicSpec: envelope constants must be positive, alpha > 1");
    double prev = 0.0;
    for (std::uint64_t n = 1; n <= envelope_check_limit; ++n) {
        const double lam = freq(n);
        const double nb = std::pow(static_cast<double>(n), beta);
        if (!(lam > 0.0) || !(lam > prev))
            throw SpecViolationError("NonharmonicSpec: frequencies must be positive and strictly increasing (n=" +
                                     std::to_string(n) + ")");
        if (lam < c2 * nb * (1.0 - 1e-12) || lam > c3 * nb * (1.0 + 1e-12))
            throw SpecViolationError("NonharmonicSpec: frequency outside growth envelope (n=" +
                                     std::to_string(n) + ")");
        if (std::abs(coeff(n)) > c1 * std::pow(static_cast<double>(n), -alpha) * (1.0 + 1e-12))
            throw SpecViolationError("NonharmonicSpec: coefficient outside decay envelope (n=" +
                                     std::to_string(n) + ")");
        prev = lam;
    }
}

std::complex<double> nonharmonic_eval(const NonharmonicSpec& spec, double x,
                                      double abs_tol) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("nonharmonic_eval: abs_tol must be > 0");
    spec.validate();
    // tail: c1 * sum_{n>N} n^-alpha <= c1 * N^(1-alpha)/(alpha-1)
    const SeriesParams shape(spec.alpha, spec.beta);
    const std::uint64_t n_terms =
        truncation_terms(shape, abs_tol / spec.c1).n_terms;
    if (n_terms > kTermCap)
        throw ConvergenceError("nonharmonic_eval: term budget exceeds practical cap",
                               0.0, abs_tol);
    detail::KahanComplex acc;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        const std::complex<double> a = spec.coeff(n);
        if (a == std::complex<double>{})
            continue;
        const double lam = spec.freq(n);
        acc.add(a * std::polar(1.0, lam * x));
    }
    return acc.value();
}

} // namespace lusin
