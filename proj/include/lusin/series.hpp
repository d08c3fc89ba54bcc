#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "lusin/errors.hpp"

namespace lusin {

// Smoothness regime of the pair (alpha, beta), split at beta = alpha - 1.
enum class Regime { differentiable, critical, rough };

// Parameters of the series sum_n sin(pi n^beta x)/n^alpha.
struct SeriesParams {
    double alpha;
    double beta;

    SeriesParams(double a, double b) : alpha(a), beta(b) {
        if (!(alpha > 1.0))
            throw std::invalid_argument("SeriesParams: requires alpha > 1");
        if (!(beta > 0.0))
            throw std::invalid_argument("SeriesParams: requires beta > 0");
    }

    // beta == alpha-1 is decided with tolerance 1e-12 since exact-case
    // formulas differ and inputs arrive as decimals.
    Regime regime() const {
        if (std::abs(beta - (alpha - 1.0)) <= 1e-12)
            return Regime::critical;
        return beta < alpha - 1.0 ? Regime::differentiable : Regime::rough;
    }
};

const char* regime_name(Regime r);

// Number of leading terms needed so the integral tail bound
// sum_{n>N} n^-alpha <= N^(1-alpha)/(alpha-1) falls below abs_tol.
struct TruncationBudget {
    double abs_tol;
    std::uint64_t n_terms;
};

TruncationBudget truncation_terms(const SeriesParams& params, double abs_tol);

// Evaluates the series at x to within abs_tol (ascending-n compensated
// summation; integer beta uses exact phase reduction).
double riemann_eval(const SeriesParams& params, double x, double abs_tol);

// sin(pi x)
double sin_baseline(double x);

// A nonharmonic series sum_n a_n e^(i lambda_n x) together with the growth
// envelope its rules must satisfy:
//   |a_n| <= c1 * n^-alpha,   c2 * n^beta <= lambda_n <= c3 * n^beta.
// The rules are opaque callables; the envelope is spot-checked on
// n <= envelope_check_limit only.
struct NonharmonicSpec {
    std::function<std::complex<double>(std::uint64_t)> coeff;
    std::function<double(std::uint64_t)> freq;
    double c1, c2, c3;
    double alpha, beta;

    static constexpr std::uint64_t envelope_check_limit = 10000;

    // Throws SpecViolationError naming the first offending index.
    void validate() const;
};

std::complex<double> nonharmonic_eval(const NonharmonicSpec& spec, double x,
                                      double abs_tol);

namespace detail {

// Compensated (Kahan) accumulator.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct KahanComplex {
    Kahan re, im;
    void add(std::complex<double> v) {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const { return {re.sum, im.sum}; }
};

} // namespace detail

} // namespace lusin
