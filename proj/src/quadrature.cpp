#include "lusin/quadrature.hpp"

namespace lusin {
namespace detail {

namespace {

// Clenshaw-Curtis weights for n+1 nodes x_j = cos(j*pi/n), n even:
//   w_0 = w_n = 1/(n^2-1)
//   w_j = (2/n) * (1 - sum_{k=1}^{n/2-1} 2*cos(2k theta_j)/(4k^2-1)
//                    - cos(n theta_j)/(n^2-1)),  0 < j < n
// Exact for polynomials of degree n; unit-tested against monomials.
template <int N>
void cc_weights(double* w) {
    static_assert(N % 2 == 0);
    w[0] = w[N] = 1.0 / (double(N) * N - 1.0);
    for (int j = 1; j < N; ++j) {
        const double theta = M_PI * j / N;
        double v = 1.0;
        for (int k = 1; k < N / 2; ++k)
            v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        v -= std::cos(N * theta) / (double(N) * N - 1.0);
        w[j] = 2.0 * v / N;
    }
}

CCRule make_rule() {
    CCRule r;
    for (int j = 0; j <= 32; ++j)
        r.nodes[j] = std::cos(M_PI * j / 32.0);
    r.nodes[16] = 0.0;
    cc_weights<32>(r.w33.data());
    cc_weights<16>(r.w17.data());
    return r;
}

} // namespace

const CCRule& cc_rule() {
    static const CCRule rule = make_rule();
    return rule;
}

} // namespace detail
} // namespace lusin
