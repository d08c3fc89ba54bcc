#include "lusin/phase.hpp"

#include <cmath>

namespace lusin {

double sinpi(double w) {
    w = std::fmod(w, 2.0);
    if (w < -1.0)
        w += 2.0;
    else if (w >= 1.0)
        w -= 2.0;
    if (w > 0.5)
        w = 1.0 - w;
    else if (w < -0.5)
        w = -1.0 - w;
    return std::sin(M_PI * w);
}

double cospi(double w) {
    return sinpi(0.5 - w);
}

std::complex<double> unit_phase(double w) {
    return {cospi(w), sinpi(w)};
}

std::optional<unsigned> as_integer_exponent(double beta) {
    const double r = std::nearbyint(beta);
    if (r >= 1.0 && r <= 60.0 && std::abs(beta - r) <= 1e-12)
        return static_cast<unsigned>(r);
    return std::nullopt;
}

std::uint64_t ipow_or_zero(std::uint64_t n, unsigned beta) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < beta; ++i) {
        acc *= n;
        if (acc >> 63)
            return 0;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

// Little-endian 256-bit value; all arithmetic is modulo 2^256.
struct U256 {
    std::uint64_t w[4] = {0, 0, 0, 0};
};

U256 from_u64(std::uint64_t v) {
    U256 r;
    r.w[0] = v;
    return r;
}

U256 mul256(const U256& a, const U256& b) {
    U256 r;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 carry = 0;
        for (int j = 0; j + i < 4; ++j) {
            unsigned __int128 cur = (unsigned __int128)a.w[i] * b.w[j] + r.w[i + j] + carry;
            r.w[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
    }
    return r;
}

U256 pow256(std::uint64_t base, unsigned exp) {
    U256 result = from_u64(1);
    U256 b = from_u64(base);
    while (exp) {
        if (exp & 1u)
            result = mul256(result, b);
        b = mul256(b, b);
        exp >>= 1;
    }
    return result;
}

void mask_low_bits(U256& a, int bits) {
    for (int i = 0; i < 4; ++i) {
        const int lo = 64 * i;
        if (bits <= lo) {
            a.w[i] = 0;
        } else if (bits < lo + 64) {
            a.w[i] &= (std::uint64_t(1) << (bits - lo)) - 1;
        }
    }
}

// v * 2^s as a double, assembled from 32-bit half-limbs in ascending order.
double scaled_to_double(const U256& v, int s) {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        const std::uint64_t lo = v.w[i] & 0xffffffffu;
        const std::uint64_t hi = v.w[i] >> 32;
        if (lo)
            acc += std::ldexp(static_cast<double>(lo), 64 * i + s);
        if (hi)
            acc += std::ldexp(static_cast<double>(hi), 64 * i + 32 + s);
    }
    return acc;
}

double fold2(double w) {
    if (w >= 2.0)
        w -= 2.0;
    else if (w < 0.0)
        w += 2.0;
    return w;
}

} // namespace

double power_phase_mod2(std::uint64_t n, unsigned beta, double x) {
    if (x == 0.0 || n == 0)
        return 0.0;
    const bool negative = x < 0.0;
    const double ax = std::fmod(std::abs(x), 2.0); // exact; n^beta * 2k is even
    if (ax == 0.0)
        return 0.0;

    double w;
    const std::uint64_t ip = ipow_or_zero(n, beta);
    const double ipd = static_cast<double>(ip);
    if (ip != 0 && ip < (std::uint64_t(1) << 53) && ipd * ax < 0x1p50) {
        // two-product: ipd*ax = p_hi + p_lo exactly, then reduce p_hi alone
        const double p_hi = ipd * ax;
        const double p_lo = std::fma(ipd, ax, -p_hi);
        w = fold2(std::fmod(p_hi, 2.0) + p_lo);
    } else {
        const double log2_pow = beta * std::log2(static_cast<double>(n));
        int e;
        const double fr = std::frexp(ax, &e); // ax = fr * 2^e, fr in [0.5,1)
        const int mbits = 54 - e;             // need n^beta * mant mod 2^mbits
        if (log2_pow <= 250.0 && mbits <= 256) {
            const auto mant = static_cast<std::uint64_t>(std::ldexp(fr, 53));
            U256 v = mul256(pow256(n, beta), from_u64(mant));
            mask_low_bits(v, mbits);
            w = fold2(scaled_to_double(v, e - 53));
        } else {
            // beyond the exact range; plain double arithmetic
            w = fold2(std::fmod(std::pow(static_cast<double>(n),
                                         static_cast<double>(beta)) * ax, 2.0));
        }
    }

    if (negative && w != 0.0)
        w = 2.0 - w;
    return w;
}

} // namespace lusin
