#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace lusin {

// sin(pi*w) / cos(pi*w) with quadrant folding so the argument passed to the
// libm routine never exceeds pi/2.
double sinpi(double w);
double cospi(double w);

// e^(i*pi*w)
std::complex<double> unit_phase(double w);

// Integer exponent matching: round(beta) if |beta - round(beta)| <= 1e-12
// and the result lies in [1, 60], else nullopt.
std::optional<unsigned> as_integer_exponent(double beta);

// n^beta as uint64 if it fits below 2^63, else 0.
std::uint64_t ipow_or_zero(std::uint64_t n, unsigned beta);

// w = n^beta * x (mod 2), w in [0,2), for integer beta, computed exactly.
//
// x is first folded by fmod(x, 2) (exact; n^beta * 2k is an even integer).
// What remains is the reduced fraction n^beta * m * 2^(e-53) mod 2 with m
// the 53-bit mantissa of |x| mod 2, which is obtained from n^beta * m
// modulo a power of two. That modulus can need up to 256 bits, so the
// power is formed with truncated 256-bit arithmetic. Falls back to plain
// double evaluation when n^beta * x is small enough that direct rounding
// error is negligible (< 2^26).
double power_phase_mod2(std::uint64_t n, unsigned beta, double x);

} // namespace lusin
