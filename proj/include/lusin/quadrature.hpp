#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <vector>

#include "lusin/errors.hpp"

namespace lusin {

// Tolerance / budget for one adaptive integration.
struct QuadSpec {
    double abs_tol = 1e-10; // absolute error target, > 0
    int max_depth = 60;     // per-panel bisection limit, >= 1

    void validate() const {
        if (!(abs_tol > 0.0))
            throw std::invalid_argument("QuadSpec: abs_tol must be > 0");
        if (max_depth < 1)
            throw std::invalid_argument("QuadSpec: max_depth must be >= 1");
    }
};

namespace detail {

// Nested Clenshaw-Curtis pair on [-1,1]: 33 nodes, of which every second
// one is the embedded 17-node rule. Error estimate = |I33 - I17|.
struct CCRule {
    std::array<double, 33> nodes; // cos(j*pi/32), j = 0..32 (descending)
    std::array<double, 33> w33;
    std::array<double, 17> w17;   // applies to nodes[0,2,4,...,32]
};
const CCRule& cc_rule();

template <class F>
using quad_value_t = std::remove_cvref_t<std::invoke_result_t<F&, double>>;

constexpr std::size_t kPanelCap = 4'000'000;

// Globally adaptive bisection: always split the panel with the largest
// error estimate until the estimates sum below the budget. Panels that
// reach max_depth are frozen with their residual error.
template <class F, class T = quad_value_t<F>>
T adaptive_cc(F& f, double lo, double hi, const QuadSpec& spec, const char* what) {
    const CCRule& rule = cc_rule();

    struct Panel {
        double err;
        double a, b;
        T value;
        int depth;
        bool operator<(const Panel& o) const {
            return err != o.err ? err < o.err : a > o.a; // max-heap on err
        }
    };

    auto eval_panel = [&](double a, double b, int depth) {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        std::array<T, 33> fv;
        for (int j = 0; j < 33; ++j)
            fv[j] = f(c + h * rule.nodes[j]);
        T fine{};
        for (int j = 0; j < 33; ++j)
            fine += rule.w33[j] * fv[j];
        T coarse{};
        for (int j = 0; j < 17; ++j)
            coarse += rule.w17[j] * fv[2 * j];
        fine = h * fine;
        coarse = h * coarse;
        return Panel{std::abs(fine - coarse), a, b, fine, depth};
    };

    std::vector<Panel> heap;
    heap.push_back(eval_panel(lo, hi, 0));

    T frozen_value{};
    double frozen_err = 0.0;
    double live_err = heap.front().err;

    while (live_err + frozen_err > spec.abs_tol) {
        if (frozen_err > spec.abs_tol || heap.empty() || heap.size() > kPanelCap) {
            T total = frozen_value;
            for (const Panel& p : heap)
                total += p.value;
            throw ConvergenceError(std::string(what) + ": tolerance not met",
                                   std::abs(total), live_err + frozen_err);
        }
        std::pop_heap(heap.begin(), heap.end());
        Panel worst = heap.back();
        heap.pop_back();
        live_err -= worst.err;
        if (worst.depth >= spec.max_depth) {
            frozen_value += worst.value;
            frozen_err += worst.err;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        for (Panel child : {eval_panel(worst.a, mid, worst.depth + 1),
                            eval_panel(mid, worst.b, worst.depth + 1)}) {
            live_err += child.err;
            heap.push_back(std::move(child));
            std::push_heap(heap.begin(), heap.end());
        }
    }

    T total = frozen_value;
    for (const Panel& p : heap)
        total += p.value;
    return total;
}

} // namespace detail

// Integrate f over [lo, hi]; hi may be +infinity, in which case the change
// of variables t = lo + u/(1-u) maps the half-line to [0,1) and the caller
// must supply a decaying integrand. Error target is spec.abs_tol; an
// exhausted budget raises ConvergenceError carrying the best estimate.
template <class F, class T = detail::quad_value_t<F>>
T integrate(F&& f, double lo, double hi, const QuadSpec& spec) {
    spec.validate();
    if (std::isinf(hi)) {
        auto g = [&f, lo](double u) -> T {
            if (u >= 1.0)
                return T{};
            const double om = 1.0 - u;
            return f(lo + u / om) / (om * om);
        };
        return detail::adaptive_cc(g, 0.0, 1.0, spec, "integrate[half-line]");
    }
    if (!(lo < hi))
        throw std::invalid_argument("integrate: requires lo < hi");
    return detail::adaptive_cc(f, lo, hi, spec, "integrate");
}

} // namespace lusin
