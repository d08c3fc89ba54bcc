#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lusin/special.hpp"
#include "oracles.hpp"

using namespace lusin;

TEST_CASE("zeta against partial-sum-plus-tail oracle") {
    for (double s : {2.0, 4.0}) {
        const auto [ref, half_width] = oracle::zeta_bracket(s);
        CHECK(std::abs(zeta(s) - ref) <= half_width + 1e-12 * ref);
    }
    CHECK(zeta(2.0) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
    CHECK(zeta(4.0) == doctest::Approx(1.0823232337111382).epsilon(1e-12));
}

TEST_CASE("zeta(30) is 1 plus the two-term tail") {
    const double tail = zeta(30.0) - 1.0;
    const double two_term = std::pow(2.0, -30.0) + std::pow(3.0, -30.0);
    CHECK(tail == doctest::Approx(two_term).epsilon(1e-6));
    CHECK(tail == doctest::Approx(9.31323e-10).epsilon(1e-5)); // 2^-30 to 3 digits
    CHECK(zeta_minus_one(30.0) == doctest::Approx(tail).epsilon(1e-12));
}

TEST_CASE("zeta domain and monotonicity") {
    CHECK_THROWS_AS(zeta(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta(0.5), std::domain_error);
    double prev = zeta(1.1);
    for (double s = 1.3; s < 24.0; s += 0.7) {
        const double cur = zeta(s);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("gamma at small integers and half") {
    CHECK(lusin::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lusin::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    const double ref = oracle::simpson(
        [](double u) { return 2.0 * std::exp(-u * u); }, 0.0, 12.0, 1e-13);
    // Gamma(1/2) via t = u^2
    CHECK(lusin::gamma(0.5) == doctest::Approx(ref).epsilon(1e-11));
    CHECK(lusin::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-12));
}

TEST_CASE("gamma recurrence on [0.1, 10]") {
    for (double x = 0.1; x <= 10.0; x += 0.37) {
        const double lhs = lusin::gamma(x + 1.0);
        CHECK(std::abs(lhs - x * lusin::gamma(x)) <= 1e-10 * lhs);
    }
}

TEST_CASE("gamma domain") {
    CHECK_THROWS_AS(lusin::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(lusin::gamma(-2.0), std::domain_error);
}

TEST_CASE("incomplete gamma reduces to gamma at y=0") {
    for (double x : {0.5, 1.0, 2.0})
        CHECK(upper_incomplete_gamma(x, 0.0) ==
              doctest::Approx(lusin::gamma(x)).epsilon(1e-12));
}

TEST_CASE("incomplete gamma fixtures") {
    CHECK(upper_incomplete_gamma(1.0, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-10)); // int_1^inf e^-t dt
    const double ref = oracle::simpson_to_inf(
        [](double t) { return std::exp(-t) / std::sqrt(t); }, 2.0, 1e-13);
    CHECK(ref == doctest::Approx(0.0806).epsilon(2e-3));
    CHECK(upper_incomplete_gamma(0.5, 2.0) == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("incomplete gamma keeps relative accuracy for large y") {
    // Gamma(1, y) = e^-y exactly
    for (double y : {5.0, 30.0, 100.0, 500.0})
        CHECK(upper_incomplete_gamma(1.0, y) ==
              doctest::Approx(std::exp(-y)).epsilon(1e-10));
}

TEST_CASE("incomplete gamma strictly decreasing in y") {
    for (double x : {0.3, 1.0, 2.5}) {
        double prev = upper_incomplete_gamma(x, 0.0);
        for (double y = 0.25; y < 12.0; y *= 1.9) {
            const double cur = upper_incomplete_gamma(x, y);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    CHECK_THROWS_AS(upper_incomplete_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, -0.5), std::domain_error);
}

TEST_CASE("E1 fixtures against quadrature oracle") {
    const double ref1 = oracle::simpson_to_inf(
        [](double u) { return std::exp(-u) / u; }, 1.0, 1e-14);
    CHECK(ref1 == doctest::Approx(0.21938393439552029).epsilon(1e-12));
    CHECK(exp_integral_e1(1.0) == doctest::Approx(ref1).epsilon(1e-10));

    const double ref10 = oracle::simpson_to_inf(
        [](double u) { return std::exp(-u) / u; }, 10.0, 1e-18);
    CHECK(exp_integral_e1(10.0) == doctest::Approx(ref10).epsilon(1e-8));
    CHECK(exp_integral_e1(10.0) == doctest::Approx(4.1570e-6).epsilon(1e-4));
    CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
}

TEST_CASE("E1 bracket at x=1") {
    const double lower = 0.5 * std::exp(-1.0) * std::log(3.0);
    const double upper = std::exp(-1.0) * std::log(2.0);
    CHECK(lower == doctest::Approx(0.2021).epsilon(1e-3));
    CHECK(upper == doctest::Approx(0.2550).epsilon(1e-3));
    const double v = exp_integral_e1(1.0);
    CHECK(v > lower);
    CHECK(v < upper);
}

TEST_CASE("E1 two-sided bracket on 200 log-spaced points") {
    for (int i = 0; i < 200; ++i) {
        const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 199.0);
        const double v = exp_integral_e1(x);
        const double lower = 0.5 * std::exp(-x) * std::log1p(2.0 / x);
        const double upper = std::exp(-x) * std::log1p(1.0 / x);
        CHECK(v > lower);
        CHECK(v < upper);
    }
}
