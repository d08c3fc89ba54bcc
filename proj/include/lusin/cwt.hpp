#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "lusin/quadrature.hpp"
#include "lusin/series.hpp"

namespace lusin {

// The analyzing wavelet psi(x) = 1/(pi (x+i)^2), an analytic-signal wavelet:
// psi-hat(xi) = -2 xi e^-xi for xi >= 0 and 0 below.
struct LusinWavelet {
    static std::complex<double> eval(double x) {
        const std::complex<double> z(x, 1.0);
        return 1.0 / (M_PI * z * z);
    }
    static double ft(double xi) {
        return xi >= 0.0 ? -2.0 * xi * std::exp(-xi) : 0.0;
    }
    // conj(psi)(u), the kernel appearing in the transform integral
    static std::complex<double> conj_eval(double u) {
        const std::complex<double> z(u, -1.0);
        return 1.0 / (M_PI * z * z);
    }
};

// The transform of the series at one fixed scale:
//   W(a,b) = i a pi sum_n e^{-a pi n^beta} n^{beta-alpha} e^{i pi n^beta b},
// truncated where the positive envelope tail falls below abs_tol (and, for
// beta >= 1, additionally below the running sum's relative precision, so
// the modulus at b=0 carries near-machine relative accuracy).
// Preparing once and evaluating at many positions b shares the term table.
class CwtAtScale {
public:
    CwtAtScale(const SeriesParams& params, double a, double abs_tol);

    std::complex<double> eval(double b) const;

    // |W(a,0)|; the b=0 column is i times a positive sum
    double modulus_at_origin() const { return origin_modulus_; }

    double scale() const { return a_; }
    std::uint64_t terms() const { return n_terms_; }
    bool closed_form() const { return closed_form_; }

private:
    std::complex<double> eval_series(double b) const;
    std::complex<double> term_phase(std::uint64_t n, double b) const;

    SeriesParams params_;
    double a_;
    double decay_; // a*pi
    double abs_tol_;
    std::uint64_t n_terms_ = 0;
    bool closed_form_ = false;         // geometric log-series route (alpha-beta = 1, beta = 1)
    bool int_beta_ = false;
    unsigned beta_int_ = 0;
    double origin_modulus_ = 0.0;
    bool stored_ = false;
    std::vector<double> magnitudes_;   // a pi e^{-a pi n^beta} n^{beta-alpha}
    std::vector<double> powers_;       // n^beta as double (0 marker: use exact reduction)
};

// W_psi R_{alpha,beta}(a,b) to within abs_tol.
std::complex<double> cwt_analytic(const SeriesParams& params, double a, double b,
                                  double abs_tol);

// W_psi S(a,b) = -2a sum_n a_n lambda_n e^{i lambda_n (b+ia)} for a
// nonharmonic series, truncated through its growth envelope.
std::complex<double> cwt_nonharmonic(const NonharmonicSpec& spec, double a,
                                     double b, double abs_tol);

// Quadrature of the defining integral int f(x) (1/a) conj(psi)((x-b)/a) dx
// for a bounded f with |f| <= sup_bound. The domain is truncated to
// |x - b| <= U a with U from the tail bound sup_bound * 2/(pi U) <= abs_tol/2.
std::complex<double> cwt_numeric(const std::function<double(double)>& f,
                                 double sup_bound, double a, double b,
                                 const QuadSpec& quad);

// Rectangular grid of transform values.
struct Scalogram {
    std::vector<double> scales;                // strictly increasing, > 0
    std::vector<double> positions;             // non-decreasing
    std::vector<std::complex<double>> values;  // row-major, scales x positions
    SeriesParams meta;
    double abs_tol;

    const std::complex<double>& at(std::size_t i, std::size_t j) const {
        return values[i * positions.size() + j];
    }
};

Scalogram scalogram(const SeriesParams& params, std::vector<double> scales,
                    std::vector<double> positions, double abs_tol);

} // namespace lusin
