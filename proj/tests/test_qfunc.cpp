#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nlkg/errors.hpp"
#include "nlkg/qfunc.hpp"

using nlkg::Complex;

namespace {

bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// Limit-recovery constant measured over |z| <= 2, eps in {1e-4, 1e-5, 1e-6}
// (max observed 13.9) and frozen.
constexpr double kLimitConstant = 15.0;

}  // namespace

TEST_CASE("complex_pow examples") {
    CHECK(nlkg::complex_pow({1.0, 0.0}, {0.37, 0.0}) == Complex(1.0, 0.0));
    CHECK(close(nlkg::complex_pow({-1.0, 0.0}, {0.5, 0.0}), {0.0, 1.0}, 1e-15));
    CHECK(nlkg::complex_pow({0.0, 1.0}, {2.0, 0.0}) == Complex(-1.0, 0.0));
}

TEST_CASE("complex_pow uses the principal logarithm") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Complex b(u(rng), u(rng));
        const Complex w(u(rng), u(rng));
        const Complex expected = std::exp(w * std::log(b));
        CHECK(close(nlkg::complex_pow(b, w), expected, 1e-12));
    }
    // Negative real axis maps to arg = +pi, not -pi.
    const auto r = nlkg::complex_pow({-4.0, -0.0}, {0.5, 0.0});
    CHECK(r.imag() > 0.0);
}

TEST_CASE("complex_pow at zero base") {
    CHECK(nlkg::complex_pow({0.0, 0.0}, {2.5, 1.0}) == Complex(0.0, 0.0));
    CHECK(nlkg::complex_pow({0.0, 0.0}, {0.0, 0.0}) == Complex(1.0, 0.0));
    CHECK_THROWS_AS((void)nlkg::complex_pow({0.0, 0.0}, {-1.0, 0.0}), nlkg::PoleError);
    CHECK_THROWS_AS((void)nlkg::complex_pow({0.0, 0.0}, {0.0, 2.0}), nlkg::DomainError);
}

TEST_CASE("q_exp examples") {
    CHECK(nlkg::q_exp({0.0, 0.0}, 0.3) == Complex(1.0, 0.0));
    CHECK(close(nlkg::q_exp({1.0, 0.0}, 0.5), {2.25, 0.0}, 1e-15));
    CHECK(close(nlkg::q_exp({0.0, 1.0}, 2.0), {0.5, 0.5}, 1e-15));
    volatile double re = 0.3;  // keeps std::exp from being constant-folded
    const Complex w(re, -0.7);
    CHECK(nlkg::q_exp(w, 1.0) == std::exp(w));
}

TEST_CASE("q_exp pole on the real axis") {
    CHECK_THROWS_AS((void)nlkg::q_exp({1.0, 0.0}, 2.0), nlkg::PoleError);
    CHECK_THROWS_AS((void)nlkg::q_exp({0.5, 0.0}, 3.0), nlkg::PoleError);
    // Positive exponent 1/(1-q): the zero base is a regular point.
    CHECK(nlkg::q_exp({-2.0, 0.0}, 0.5) == Complex(0.0, 0.0));
}

TEST_CASE("q_exp_power examples") {
    const Complex z(0.4, -1.1);
    CHECK(nlkg::q_exp_power(z, 1.7, 0.0) == Complex(1.0, 0.0));
    CHECK(nlkg::q_exp_power(z, 1.7, 1.0) == nlkg::q_exp(z, 1.7));
    CHECK(close(nlkg::q_exp_power({0.0, 1.0}, 2.0, -1.0), {1.0, -1.0}, 1e-15));
}

TEST_CASE("q_exp_power_deriv examples") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        const double q = 1.0 + u(rng);
        const Complex z(0.0, 2.0 * u(rng));
        const Complex e = nlkg::q_exp(z, q);
        CHECK(close(nlkg::q_exp_power_deriv(z, q, 1.0, 1), nlkg::q_exp_power(z, q, q), 1e-13));
        CHECK(close(nlkg::q_exp_power_deriv(z, q, 1.0, 2), q * nlkg::q_exp_power(z, q, 2 * q - 1),
                    1e-13));
        CHECK(close(nlkg::q_exp_power_deriv(z, q, 1.0, 0), e, 1e-15));
    }
    CHECK(nlkg::q_exp_power_deriv({0.0, 0.0}, 1.0, 2.0, 1) == Complex(2.0, 0.0));
}

TEST_CASE("branch consistency inside the single-sheet region") {
    // Holds while |Arg(1 + (1-q) z) r / (1-q)| stays below pi, i.e. when
    // one principal power of the base reproduces e_q^r without wrapping.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    for (int i = 0; i < 2000; ++i) {
        const double q = 1.0 + 1.5 * u(rng);
        if (nlkg::is_standard_q(q)) continue;
        const double r = 2.0 * u(rng);
        const Complex z(2.0 * u(rng), 2.0 * u(rng));
        const Complex base = 1.0 + (1.0 - q) * z;
        if (base.real() <= 0.0) continue;
        const double arg = std::arg(base);
        if (std::abs(arg / (1.0 - q)) >= std::numbers::pi) continue;
        if (std::abs(arg * r / (1.0 - q)) >= std::numbers::pi) continue;
        const Complex direct = nlkg::q_exp_power(z, q, r);
        const Complex twice = nlkg::complex_pow(nlkg::q_exp(z, q), {r, 0.0});
        CHECK(std::abs(direct - twice) < 1e-12 * std::abs(direct));
        ++tested;
    }
    CHECK(tested > 200);
}

TEST_CASE("double power differs from the single power once the sheet wraps") {
    // q = 1.2, z = 30 i: Arg(base)/(1-q) ~ -7.1 lies outside (-pi, pi].
    const Complex z(0.0, 30.0);
    const Complex direct = nlkg::q_exp_power(z, 1.2, 0.5);
    const Complex twice = nlkg::complex_pow(nlkg::q_exp(z, 1.2), {0.5, 0.0});
    CHECK(std::abs(direct - twice) > 1e-3 * std::abs(direct));
}

TEST_CASE("limit recovery q -> 1") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 500; ++i) {
        const Complex z(u(rng), u(rng));
        if (std::abs(z) > 2.0) continue;
        for (double eps : {1e-4, 1e-5, 1e-6}) {
            for (double q : {1.0 + eps, 1.0 - eps}) {
                CHECK(std::abs(nlkg::q_exp(z, q) - std::exp(z)) <= kLimitConstant * eps);
            }
        }
    }
}

TEST_CASE("derivative rule against central differences") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double q = 1.0 + u(rng);
        const double r = 2.0 * u(rng);
        const Complex z(0.3 * u(rng), 2.0 * u(rng));
        const Complex fd = (nlkg::q_exp_power(z + h, q, r) - nlkg::q_exp_power(z - h, q, r)) / (2 * h);
        const Complex exact = nlkg::q_exp_power_deriv(z, q, r, 1);
        CHECK(std::abs(fd - exact) <= 1e-7 * std::abs(exact));
    }
}

TEST_CASE("higher derivatives against central differences of the previous order") {
    const Complex z(0.1, 0.8);
    const double q = 1.4;
    const double r = -0.7;
    const double h = 1e-5;
    for (unsigned n = 1; n <= 4; ++n) {
        const Complex fd = (nlkg::q_exp_power_deriv(z + h, q, r, n - 1) -
                            nlkg::q_exp_power_deriv(z - h, q, r, n - 1)) /
                           (2 * h);
        const Complex exact = nlkg::q_exp_power_deriv(z, q, r, n);
        CHECK(std::abs(fd - exact) <= 1e-7 * std::abs(exact));
    }
}

TEST_CASE("functional identity e_q^(1-q) = 1 + (1-q) z") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double q = 1.0 + 1.8 * u(rng);
        if (nlkg::is_standard_q(q)) continue;
        const Complex z(0.0, 5.0 * u(rng));
        const Complex lhs = nlkg::q_exp_power(z, q, 1.0 - q);
        const Complex rhs = 1.0 + (1.0 - q) * z;
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
    }
}

TEST_CASE("q within the standard tolerance dispatches to exp") {
    volatile double re = 0.2;
    const Complex z(re, 0.9);
    CHECK(nlkg::q_exp(z, 1.0 + 1e-13) == std::exp(z));
    CHECK(nlkg::q_exp_power(z, 1.0 - 1e-13, 2.0) == std::exp(2.0 * z));
}
